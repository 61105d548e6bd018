#pragma once

#include <vector>

#include "heckoid/interval.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

// All reduced rationals inside the interval with denominator <= max_den, in
// ascending order, produced by Stern-Brocot descent (deterministic).
std::vector<Slope> enumerate_slopes(const SlopeInterval& iv, std::int64_t max_den);

// Reflection of the boundary circle in the hyperbolic geodesic spanned by the
// Farey neighbours alpha and beta:
//   s -> ((alpha+beta) s - 2 alpha beta) / (2 s - (alpha+beta)).
// Fixes alpha and beta, is an involution, and sends the pole (alpha+beta)/2
// to infinity (and infinity to the pole).
Slope reflect_edge(const Slope& s, const Slope& alpha, const Slope& beta);

// Result of folding a rational into the fundamental domain of the reflection
// group generated by the mirrors at infinity and the two mirrors at r.
struct NormalForm {
    enum class Kind { Representative, RClass, InfinityClass };
    Kind kind = Kind::Representative;
    Slope rep;  // meaningful only for Representative

    bool operator==(const NormalForm&) const = default;
    std::string str() const;
};

// Folds s by x -> 2k - x into [0,1], then reflects in the edge <r, rhat1> or
// <r, rhat2> while the image stays strictly between the hats and differs
// from r. Terminates with a hard error after a step cap; idempotent.
NormalForm orbit_normalize(const Slope& s, const Slope& r);

bool same_orbit_hat(const Slope& s, const Slope& s2, const Slope& r);

}  // namespace heckoid
