#include "heckoid/dehn.hpp"

#include <algorithm>

namespace heckoid {

namespace {

struct BestMatch {
    int length = 0;
    int position = -1;
    const std::string* element = nullptr;
};

// Longest (leftmost on ties) common prefix of word[i..] with any element;
// cyclic scans read through the doubled word but never longer than the word.
BestMatch find_longest(const std::string& w, bool cyclic, const SymmetrizedSet& set) {
    BestMatch best;
    std::size_t n = w.size();
    std::string dbl = cyclic ? w + w : w;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cap = cyclic ? n : n - i;
        for (const std::string& e : set.elements) {
            std::size_t c = std::min(cap, e.size());
            std::size_t l = 0;
            while (l < c && dbl[i + l] == e[l]) ++l;
            if (static_cast<int>(l) > best.length) {
                best = {static_cast<int>(l), static_cast<int>(i), &e};
            }
        }
    }
    return best;
}

}  // namespace

DehnTrace dehn_reduce(const Word& w, const HeckoidContext& ctx, bool cyclic) {
    DehnTrace trace;
    trace.cyclic = cyclic;
    Word cur = cyclic ? cyclic_reduce(w) : free_reduce(w);
    const int half = ctx.half_relator();
    while (!cur.empty()) {
        BestMatch best = find_longest(cur.letters(), cyclic, ctx.symmetrized);
        if (best.length <= half) break;
        const std::string& e = *best.element;
        Word complement_inv = invert(Word(e.substr(best.length)));
        DehnStep step{best.position, best.length,
                      static_cast<int>(complement_inv.size()),
                      e.substr(0, best.length), complement_inv.letters()};
        const std::string& s = cur.letters();
        std::string next;
        if (best.position + best.length <= static_cast<int>(s.size())) {
            next = s.substr(0, best.position) + complement_inv.letters() +
                   s.substr(best.position + best.length);
        } else {  // cyclic wrap: rotate so the match starts at 0
            std::string rot = s.substr(best.position) + s.substr(0, best.position);
            next = complement_inv.letters() + rot.substr(best.length);
            step.position = 0;
            step.matched = rot.substr(0, best.length);
        }
        trace.steps.push_back(std::move(step));
        cur = cyclic ? cyclic_reduce(Word(next)) : free_reduce(Word(next));
    }
    trace.result = cur;
    return trace;
}

bool trace_is_sound(const DehnTrace& trace, const HeckoidContext& ctx) {
    for (const DehnStep& s : trace.steps) {
        if (s.replacement_len >= s.replaced_len) return false;
        std::string relator = s.matched + invert(Word(s.replacement)).letters();
        if (!ctx.symmetrized.contains(relator)) return false;
    }
    return true;
}

}  // namespace heckoid
