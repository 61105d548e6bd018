#pragma once

#include "heckoid/run_sequence.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

// The two-block decomposition cs(r) = <S1, S2, S1, S2> for r = [m1, ..., mk],
// k >= 2. S1 begins and ends with m+1, S2 begins and ends with m (m = m1).
struct SRDecomp {
    RunSeq s1, s2;
    std::int64_t m = 0;
};

// Computed by recursion on the expansion:
//   [m, m2]          -> S1 = (m+1),            S2 = (m2-1 copies of m)
//   [m, 1, m3]       -> S1 = (m3 copies of m+1), S2 = (m)
//   [m, 1, ...] k>=4 -> S1 = Phi(T1), S2 = (m, Phi(T2), m)  over tilde(r)
//   [m, m2>=2, ...]  -> S2 = Psi(T1), S1 = (m+1, Psi(T2), m+1)
// where Phi replaces each count t by t copies of m+1 separated by single m's
// and Psi dually. Every call re-verifies cs(r) = <S1,S2,S1,S2> against the
// run sequence computed directly from the loop word and aborts on mismatch,
// so a wrong expansion can never propagate.
SRDecomp sr_decomposition(const Slope& r);

// The affixes with (m+1, S1e) = (S1b, m+1) = S1 and (m, S2e) = (S2b, m) = S2;
// empty when the block is the single boundary term.
struct Affixes {
    RunSeq s1b, s1e, s2b, s2e;
};
Affixes affixes(const SRDecomp& d);

}  // namespace heckoid
