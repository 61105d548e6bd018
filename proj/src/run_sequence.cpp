#include "heckoid/run_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "heckoid/continued_fraction.hpp"

namespace heckoid {

std::string runseq_str(const RunSeq& r) {
    std::string out = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(r[i]);
    }
    return out + ")";
}

int CyclicRunSeq::sum() const { return std::accumulate(terms.begin(), terms.end(), 0); }

RunSeq CyclicRunSeq::least_rotation() const {
    std::size_t n = terms.size();
    if (n <= 1) return terms;
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int a = terms[(i + j) % n], b = terms[(best + j) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    RunSeq out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = terms[(best + j) % n];
    return out;
}

bool CyclicRunSeq::operator==(const CyclicRunSeq& o) const {
    return terms.size() == o.terms.size() && least_rotation() == o.least_rotation();
}

std::string CyclicRunSeq::str() const {
    std::string out = "⟨";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(terms[i]);
    }
    return out + "⟩";
}

RunSeq s_seq(const Word& w) {
    if (w.empty()) throw std::domain_error("run sequence of the empty word");
    RunSeq out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && letter_sign(w[j]) == letter_sign(w[i])) ++j;
        out.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

CyclicRunSeq cs_of_word(const CyclicWord& w) {
    std::size_t n = w.size();
    if (n == 0) throw std::domain_error("run sequence of the empty cyclic word");
    // Start at the first cyclic run boundary at or after position 0.
    std::size_t b = 0;
    while (b < n && letter_sign(w.at(b + n - 1)) == letter_sign(w.at(b))) ++b;
    if (b == n) return {{static_cast<int>(n)}};  // single-sign word
    RunSeq out;
    int count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t idx = b + k;
        if (k > 0 && letter_sign(w.at(idx)) != letter_sign(w.at(idx - 1))) {
            out.push_back(count);
            count = 0;
        }
        ++count;
    }
    out.push_back(count);
    return {std::move(out)};
}

CyclicRunSeq cs_of_slope(const Slope& s) { return cs_of_word(CyclicWord(u_word(s))); }

CyclicRunSeq ct_of_slope(const Slope& s) {
    if (s.is_infinity() || s.num() == 0 || s == Slope(1, 1))
        throw std::domain_error("block-count sequence undefined for 0, 1 and infinity");
    ContinuedFraction cf = cf_expand(s);
    int c = static_cast<int>(cf.terms[0]);
    CyclicRunSeq cs = cs_of_slope(s);
    for (int t : cs.terms)
        if (t != c && t != c + 1)
            throw std::domain_error("run sequence of " + s.str() + " is not {c,c+1}-valued");
    if (cf.size() == 1) return {{2}};  // cs is <c,c>: one cyclic block of two c's
    int dom = (cf.terms[1] == 1) ? c + 1 : c;
    std::size_t n = cs.size();
    RunSeq out;
    for (std::size_t i = 0; i < n; ++i) {
        if (cs.terms[i] != dom || cs.terms[(i + n - 1) % n] == dom) continue;
        int len = 0;
        std::size_t j = i;
        while (cs.terms[j % n] == dom) {
            ++len;
            ++j;
        }
        out.push_back(len);
    }
    if (out.empty())
        throw std::domain_error("run sequence of " + s.str() + " has no block boundary");
    return {std::move(out)};
}

}  // namespace heckoid
