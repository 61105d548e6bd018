#pragma once

#include <string>

#include "heckoid/continued_fraction.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

// A (possibly half-open) interval of slopes. Degenerate intervals must be
// closed on both sides.
struct SlopeInterval {
    Slope lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool contains(const Slope& s) const;
    std::string str() const;  // "[lo,hi]", "(lo,hi]", ...
};

SlopeInterval make_interval(Slope lo, Slope hi, bool lo_closed, bool hi_closed);

// Parameters of an even Heckoid group: a slope r in (0,1) whose expansion has
// at least two terms (r != 1/p), and an integer index n >= 2. Construction
// does not mirror; callers normalize r <= 1/2 where the theory assumes it.
struct HeckoidParams {
    Slope r;
    int n = 2;
    ContinuedFraction cf;  // canonical expansion of r

    HeckoidParams(Slope r_, int n_);
    std::int64_t m() const { return cf.terms.front(); }  // first term
    std::size_t k() const { return cf.size(); }
};

struct IntervalPair {
    SlopeInterval i1, i2;
};

// The boundary intervals of the index-n fundamental domain:
//   k even: i1 = [0, [m1..m_{k-1}, m_k - 1, 2]],   i2 = ( [m1..m_k, 2n-2], 1]
//   k odd:  i1 = [0, [m1..m_k, 2n-2]),             i2 = [ [m1..m_{k-1}, m_k - 1, 2], 1]
IntervalPair heckoid_intervals(const HeckoidParams& p);

// The index-free intervals [0, rhat1] and [rhat2, 1], both closed, where the
// hats drop or decrement the last expansion term depending on the parity.
IntervalPair base_intervals(const Slope& r);

// Endpoints rhat1 and rhat2 of the base intervals.
struct BaseEndpoints {
    Slope rhat1, rhat2;
};
BaseEndpoints base_endpoints(const Slope& r);

}  // namespace heckoid
