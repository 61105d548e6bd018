#pragma once

#include <optional>
#include <string>

#include "heckoid/context.hpp"
#include "heckoid/pattern.hpp"

namespace heckoid {

// One-sided report: ABSENT certifies nontriviality of the inspected word (the
// contrapositive of the half-relator criterion); PRESENT certifies nothing.
struct MatchReport {
    bool present = false;
    std::string group;       // which group the certificate speaks about
    // witness of a present match
    int subword_start = -1;
    int subword_length = 0;
    RunSeq witness_shape;

    bool certifies_nontrivial() const { return !present; }
    std::string str() const;
};

// Does the cyclic word (v) contain a subword of the cyclic word (u_r^{+-1})
// whose run shape is (S1, S2, l) or (l, S2, S1) for some positive l? Absence
// certifies that v is nontrivial in the link group <a, b | u_r>.
MatchReport obstruction_link(const CyclicWord& v, const Slope& r);

// Same with the (2n-1)-fold patterns against (u_r^{+-n}); absence certifies
// nontriviality in <a, b | u_r^n>.
MatchReport obstruction_heckoid(const CyclicWord& v, const HeckoidContext& ctx);

// Factorization w = v^d v1 with v a rotation of base or of its inverse and
// |v1| < |base|, maximizing d over all rotations. No rotation with d >= 1
// and a short remainder means no match.
struct PowerDecomposition {
    int d = 0;
    Word v;          // the winning rotation
    Word remainder;  // v1, possibly empty
    bool remainder_is_prefix = false;  // v1 is a proper prefix of v
};

std::optional<PowerDecomposition> power_decompose(const Word& w, const Word& base);

}  // namespace heckoid
