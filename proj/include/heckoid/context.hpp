#pragma once

#include <vector>

#include "heckoid/decomposition.hpp"
#include "heckoid/interval.hpp"
#include "heckoid/pattern.hpp"
#include "heckoid/word.hpp"

namespace heckoid {

// All rotations of the relator and of its inverse, deduplicated. Rotating the
// relator by the period |u_r| fixes it, so there are at most 2|u_r| distinct
// rotations per orientation.
struct SymmetrizedSet {
    std::vector<std::string> elements;  // sorted, each of length n * |u_r|
    int period = 0;                     // |u_r|

    bool contains(const std::string& w) const;
    std::size_t relator_length() const { return elements.empty() ? 0 : elements.front().size(); }
};

// Symmetrized set of u^n (n >= 1).
SymmetrizedSet build_symmetrized(const Word& u, int n);

// Everything the checkers need about one group <a, b | u_r^n>: the normalized
// parameters, the relator word and its run data, the block decomposition with
// affixes, the fundamental-domain intervals and the symmetrized relator set.
// Immutable after construction and safe to share across threads.
struct HeckoidContext {
    HeckoidParams params;     // normalized so that r <= 1/2
    bool mirrored = false;    // input slope was > 1/2
    Word u_r;
    Word relator;             // u_r^n
    CyclicRunSeq cs_r;
    SRDecomp decomp;
    Affixes affix;
    SlopeInterval i1n, i2n;   // index-n intervals
    SlopeInterval i1, i2;     // base intervals
    BaseEndpoints hats;
    SymmetrizedSet symmetrized;

    const Slope& r() const { return params.r; }
    int n() const { return params.n; }
    std::int64_t m() const { return decomp.m; }
    std::size_t k() const { return params.k(); }
    int half_relator() const { return static_cast<int>(relator.size()) / 2; }
};

// Builds and cross-validates the context. Slopes above 1/2 are mirrored
// first; r = 1/p and integral slopes are rejected.
HeckoidContext build_context(const Slope& r, int n);

}  // namespace heckoid
