#include "heckoid/pattern.hpp"

#include <cctype>
#include <stdexcept>

namespace heckoid {

Pattern pat_exact(const RunSeq& block) {
    Pattern p;
    p.reserve(block.size());
    for (int v : block) p.push_back({PatternAtom::Kind::Exact, v});
    return p;
}

Pattern pat_term(int v) { return {{PatternAtom::Kind::Exact, v}}; }
Pattern pat_at_least(int v) { return {{PatternAtom::Kind::AtLeast, v}}; }
Pattern pat_any() { return {{PatternAtom::Kind::Any, 0}}; }

Pattern pat_repeat(int count, const Pattern& body) {
    if (count < 0) throw std::invalid_argument("repeat count must be >= 0");
    Pattern p;
    p.reserve(body.size() * static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) p.insert(p.end(), body.begin(), body.end());
    return p;
}

Pattern operator+(Pattern lhs, const Pattern& rhs) {
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
}

std::string pattern_str(const Pattern& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        switch (p[i].kind) {
            case PatternAtom::Kind::Exact: out += std::to_string(p[i].value); break;
            case PatternAtom::Kind::AtLeast: out += ">=" + std::to_string(p[i].value); break;
            case PatternAtom::Kind::Any: out += "?"; break;
        }
    }
    return out + ")";
}

PatternMatch match_pattern(const CyclicRunSeq& host, const Pattern& p) {
    std::size_t n = host.size(), L = p.size();
    if (L == 0) throw std::domain_error("empty pattern");
    if (L > n) return {};
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < L; ++j)
            if (!p[j].admits(host.terms[(i + j) % n])) {
                ok = false;
                break;
            }
        if (ok) return {true, static_cast<int>(i)};
    }
    return {};
}

PatternMatch match_linear(const RunSeq& host, const Pattern& p) {
    std::size_t n = host.size(), L = p.size();
    if (L == 0) throw std::domain_error("empty pattern");
    if (L > n) return {};
    for (std::size_t i = 0; i + L <= n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < L; ++j)
            if (!p[j].admits(host[i + j])) {
                ok = false;
                break;
            }
        if (ok) return {true, static_cast<int>(i)};
    }
    return {};
}

Pattern relax_ends(Pattern p) {
    auto relax = [](PatternAtom& a) {
        if (a.kind == PatternAtom::Kind::Exact)
            a.kind = PatternAtom::Kind::AtLeast;
        else if (a.kind == PatternAtom::Kind::Any)
            a = {PatternAtom::Kind::AtLeast, 1};
    };
    if (!p.empty()) {
        relax(p.front());
        relax(p.back());
    }
    return p;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const SRDecomp* decomp;
    const Affixes* affixes;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad pattern '" + std::string(text) + "': " + why);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    const RunSeq* named_block(const std::string& name) {
        if (!decomp) fail("block name '" + name + "' needs a context");
        if (name == "S1") return &decomp->s1;
        if (name == "S2") return &decomp->s2;
        if (!affixes) fail("affix name '" + name + "' needs a context");
        if (name == "S1b") return &affixes->s1b;
        if (name == "S1e") return &affixes->s1e;
        if (name == "S2b") return &affixes->s2b;
        if (name == "S2e") return &affixes->s2e;
        fail("unknown block name '" + name + "'");
    }

    Pattern parse_group() {  // after '('
        Pattern out = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("missing ')'");
        ++pos;
        return out;
    }

    Pattern parse_sequence(bool in_group) {
        Pattern out;
        while (!done()) {
            skip_ws();
            char c = peek();
            if (c == ')') {
                if (!in_group) fail("stray ')'");
                break;
            }
            if (c == '?') {
                ++pos;
                out = std::move(out) + pat_any();
            } else if (c == '>') {
                if (pos + 1 >= text.size() || text[pos + 1] != '=') fail("expected '>='");
                pos += 2;
                out = std::move(out) + pat_at_least(parse_int());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                int v = parse_int();
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                    if (pos >= text.size() || text[pos] != '(') fail("expected '(' after '*'");
                    ++pos;
                    out = std::move(out) + pat_repeat(v, parse_group());
                } else {
                    out = std::move(out) + pat_term(v);
                }
            } else if (c == 'S') {
                std::size_t start = pos;
                while (pos < text.size() &&
                       std::isalnum(static_cast<unsigned char>(text[pos])))
                    ++pos;
                out = std::move(out) + pat_exact(*named_block(std::string(text.substr(start, pos - start))));
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return out;
    }
};

}  // namespace

Pattern parse_pattern(std::string_view text, const SRDecomp* decomp, const Affixes* affixes) {
    Parser p{text, 0, decomp, affixes};
    Pattern out = p.parse_sequence(false);
    if (out.empty()) p.fail("empty pattern");
    return out;
}

}  // namespace heckoid
