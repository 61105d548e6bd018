#include "heckoid/word.hpp"

#include <stdexcept>

namespace heckoid {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (!is_letter(c))
            throw std::invalid_argument("word letters must be one of a,b,A,B");
}

bool Word::is_alternating() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (letter_gen(letters_[i]) == letter_gen(letters_[i - 1])) return false;
    return true;
}

bool Word::is_cyclically_alternating() const {
    if (letters_.empty()) return true;
    return is_alternating() && letters_.size() % 2 == 0;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.substr(pos, len));
}

Word Word::rotated(std::size_t by) const {
    if (letters_.empty()) return *this;
    by %= letters_.size();
    return Word(letters_.substr(by) + letters_.substr(0, by));
}

Word u_word(const Slope& s) {
    if (!s.in_unit_interval())
        throw std::domain_error("loop words are defined for slopes in [0,1], got " + s.str());
    std::int64_t q = s.num(), p = s.den();
    std::string out;
    out.reserve(2 * p);
    for (std::int64_t i = 0; i < 2 * p; ++i) {
        char gen = (i % 2 == 0) ? 'a' : 'b';
        bool negative = ((i * q) / p) % 2 != 0;
        out.push_back(negative ? static_cast<char>(gen ^ 0x20) : gen);
    }
    return Word(std::move(out));
}

Word invert(const Word& w) {
    std::string out(w.letters().rbegin(), w.letters().rend());
    for (char& c : out) c = letter_inverse(c);
    return Word(std::move(out));
}

Word concat(const Word& x, const Word& y) { return Word(x.letters() + y.letters()); }

Word power(const Word& w, int n) {
    if (n < 1) throw std::domain_error("power exponent must be >= 1");
    if (w.size() % 2 != 0) throw std::domain_error("power needs an even-length word");
    std::string out;
    out.reserve(w.size() * n);
    for (int i = 0; i < n; ++i) out += w.letters();
    return Word(std::move(out));
}

Word free_reduce(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w.letters()) {
        if (!out.empty() && out.back() == letter_inverse(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::string s = r.letters();
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo] == letter_inverse(s[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(s.substr(lo, hi - lo));
}

CyclicWord::CyclicWord(Word rep) : rep_(std::move(rep)) {
    if (!rep_.is_cyclically_alternating())
        throw std::domain_error("cyclic words must be cyclically alternating");
}

Word CyclicWord::canonical_rotation() const {
    if (rep_.empty()) return rep_;
    std::size_t n = rep_.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int a = letter_rank(rep_[(i + j) % n]);
            int b = letter_rank(rep_[(best + j) % n]);
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    return rep_.rotated(best);
}

std::string CyclicWord::str() const { return "(" + canonical_rotation().letters() + ")"; }

bool CyclicWord::operator==(const CyclicWord& o) const {
    if (rep_.size() != o.rep_.size()) return false;
    return canonical_rotation() == o.canonical_rotation();
}

std::vector<Occurrence> occurrences(const Word& pattern, const CyclicWord& host) {
    std::vector<Occurrence> out;
    std::size_t n = host.size(), m = pattern.size();
    if (m == 0 || m > n || !pattern.is_alternating()) return out;
    auto scan = [&](const Word& h, bool inverted) {
        for (std::size_t i = 0; i < n; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < m; ++j)
                if (h[(i + j) % n] != pattern[j]) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back({static_cast<int>(i), inverted});
        }
    };
    scan(host.rep(), false);
    scan(invert(host.rep()), true);
    return out;
}

}  // namespace heckoid
