#include "heckoid/pieces.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckoid {

namespace {

constexpr int kInf = 1 << 29;

// Longest common prefix of text[from..] (linear) with each element; returns
// the largest and second largest.
struct TopTwo {
    int best = 0, second = 0;
};

TopTwo lcp_top_two(const std::string& text, std::size_t from, const SymmetrizedSet& set) {
    TopTwo t;
    for (const std::string& e : set.elements) {
        std::size_t l = 0, cap = std::min(text.size() - from, e.size());
        while (l < cap && text[from + l] == e[l]) ++l;
        int li = static_cast<int>(l);
        if (li > t.best) {
            t.second = t.best;
            t.best = li;
        } else if (li > t.second) {
            t.second = li;
        }
    }
    return t;
}

bool occurs_in_relator(const Word& w, const HeckoidContext& ctx) {
    // The set is closed under rotation, so subwords of elements are exactly
    // prefixes of elements.
    if (w.size() > ctx.relator.size()) return false;
    return lcp_top_two(w.letters(), 0, ctx.symmetrized).best == static_cast<int>(w.size());
}

}  // namespace

bool is_piece(const Word& w, const HeckoidContext& ctx) {
    if (w.empty()) throw std::domain_error("the empty word is not tested for piecehood");
    return lcp_top_two(w.letters(), 0, ctx.symmetrized).second >= static_cast<int>(w.size());
}

int max_piece_prefix(const Word& w, std::size_t from, const HeckoidContext& ctx) {
    return lcp_top_two(w.letters(), from, ctx.symmetrized).second;
}

PieceDecomposition min_pieces(const Word& w, const HeckoidContext& ctx) {
    if (w.empty()) throw std::domain_error("min_pieces of the empty word");
    if (!occurs_in_relator(w, ctx))
        throw std::domain_error("word is not a subword of the relator cyclic word");
    std::size_t n = w.size();
    PieceDecomposition out;
    out.dp.assign(n + 1, kInf);
    std::vector<int> jump_from(n + 1, -1);
    out.dp[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.dp[i] == kInf) continue;
        int mx = max_piece_prefix(w, i, ctx);
        for (int l = 1; l <= mx; ++l) {
            if (out.dp[i] + 1 < out.dp[i + l]) {
                out.dp[i + l] = out.dp[i] + 1;
                jump_from[i + l] = static_cast<int>(i);
            }
        }
    }
    if (out.dp[n] >= kInf)
        throw std::runtime_error("relator subword admits no piece cover");  // cannot happen
    out.count = out.dp[n];
    for (int pos = static_cast<int>(n); pos > 0; pos = jump_from[pos]) out.cuts.push_back(pos);
    out.cuts.push_back(0);
    std::reverse(out.cuts.begin(), out.cuts.end());
    return out;
}

std::vector<int> common_prefix_table(const CyclicWord& host, const SymmetrizedSet& set) {
    std::size_t n = host.size();
    std::string dbl = host.rep().letters() + host.rep().letters();
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cap = std::min(n, set.relator_length());
        int best = 0;
        for (const std::string& e : set.elements) {
            std::size_t l = 0, c = std::min(cap, e.size());
            while (l < c && dbl[i + l] == e[l]) ++l;
            best = std::max(best, static_cast<int>(l));
        }
        out[i] = best;
    }
    return out;
}

std::vector<int> piece_prefix_table(const CyclicWord& host, const HeckoidContext& ctx) {
    std::size_t n = host.size();
    std::string dbl = host.rep().letters() + host.rep().letters();
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        TopTwo t;
        std::size_t cap = std::min(n, ctx.relator.size());
        for (const std::string& e : ctx.symmetrized.elements) {
            std::size_t l = 0, c = std::min(cap, e.size());
            while (l < c && dbl[i + l] == e[l]) ++l;
            int li = static_cast<int>(l);
            if (li > t.best) {
                t.second = t.best;
                t.best = li;
            } else if (li > t.second) {
                t.second = li;
            }
        }
        out[i] = t.second;
    }
    return out;
}

std::vector<CommonSubword> relator_subwords_of(const CyclicWord& v, const SymmetrizedSet& set) {
    std::vector<int> len = common_prefix_table(v, set);
    std::size_t n = v.size();
    std::vector<CommonSubword> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (len[i] == 0) continue;
        // Drop intervals contained in the one starting at the previous
        // position (cyclically): [i, i+len) sits inside [j, j+len_j) iff
        // (i - j mod n) + len_i <= len_j.
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j) {
            if (j == i || len[j] == 0) continue;
            std::size_t off = (i + n - j) % n;
            if (off + len[i] <= static_cast<std::size_t>(len[j])) maximal = false;
        }
        if (maximal) out.push_back({static_cast<int>(i), len[i]});
    }
    return out;
}

std::vector<CommonSubword> relator_subwords_of(const CyclicWord& v, const HeckoidContext& ctx) {
    return relator_subwords_of(v, ctx.symmetrized);
}

int min_pieces_in(const CyclicWord& host, int start, int len, const std::vector<int>& piece_table) {
    if (len <= 0) throw std::domain_error("min_pieces_in needs a nonempty interval");
    std::size_t n = host.size();
    std::vector<int> dp(len + 1, kInf);
    dp[0] = 0;
    for (int i = 0; i < len; ++i) {
        if (dp[i] == kInf) continue;
        int mx = std::min(piece_table[(start + i) % n], len - i);
        for (int l = 1; l <= mx; ++l) dp[i + l] = std::min(dp[i + l], dp[i] + 1);
    }
    return dp[len] >= kInf ? -1 : dp[len];
}

}  // namespace heckoid
