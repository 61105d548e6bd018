#include "heckoid/farey.hpp"

#include <stdexcept>

namespace heckoid {

namespace {

// In-order Stern-Brocot traversal of (lo, hi) mediants, pruned by denominator
// and by the target interval. Recursion depth is bounded by max_den.
void descend(const Slope& lo, const Slope& hi, std::int64_t max_den,
             const SlopeInterval& iv, std::vector<Slope>& out) {
    Slope mid = mediant(lo, hi);
    if (mid.den() > max_den) return;
    // Every mediant below lies strictly inside (lo, hi); prune subtrees that
    // cannot meet the target interval.
    if (!(lo < iv.hi) || !(hi > iv.lo)) return;
    descend(lo, mid, max_den, iv, out);
    if (iv.contains(mid)) out.push_back(mid);
    descend(mid, hi, max_den, iv, out);
}

}  // namespace

std::vector<Slope> enumerate_slopes(const SlopeInterval& iv, std::int64_t max_den) {
    std::vector<Slope> out;
    if (max_den < 1) return out;
    Slope zero(0, 1), one(1, 1);
    if (iv.lo < zero || iv.hi > one)
        throw std::domain_error("slope enumeration is defined on [0,1]");
    if (iv.contains(zero)) out.push_back(zero);
    descend(zero, one, max_den, iv, out);
    if (iv.contains(one)) out.push_back(one);
    return out;
}

Slope reflect_edge(const Slope& s, const Slope& alpha, const Slope& beta) {
    if (!is_farey_edge(alpha, beta))
        throw std::domain_error("reflect_edge needs a Farey edge, got <" + alpha.str() + "," +
                                beta.str() + ">");
    // With alpha=a/b, beta=c/d and s=q/p (p may be 0 for infinity):
    //   image = ((ad+cb) q - 2ac p) / (2bd q - (ad+cb) p)
    __int128 a = alpha.num(), b = alpha.den(), c = beta.num(), d = beta.den();
    __int128 q = s.num(), p = s.den();
    __int128 num = (a * d + c * b) * q - 2 * a * c * p;
    __int128 den = 2 * b * d * q - (a * d + c * b) * p;
    return make_slope_checked(num, den);
}

std::string NormalForm::str() const {
    switch (kind) {
        case Kind::RClass: return "r-class";
        case Kind::InfinityClass: return "infinity-class";
        default: return "rep(" + rep.str() + ")";
    }
}

NormalForm orbit_normalize(const Slope& s, const Slope& r) {
    BaseEndpoints hats = base_endpoints(r);  // validates r
    constexpr int kStepCap = 10000;
    Slope x = s;
    for (int step = 0; step < kStepCap; ++step) {
        if (x.is_infinity()) return {NormalForm::Kind::InfinityClass, Slope(0, 1)};
        // Fold by the mirrors at infinity (x -> 2k - x) into [0,1]:
        // first translate by an even integer into [0,2), then reflect at 1.
        if (x < Slope(0, 1) || x > Slope(1, 1)) {
            __int128 q = x.num(), p = x.den();
            __int128 twop = 2 * p;
            __int128 m = q % twop;
            if (m < 0) m += twop;
            Slope folded = make_slope_checked(m, p);  // in [0,2)
            if (folded > Slope(1, 1)) folded = Slope(2, 1) - folded;
            x = folded;
            continue;
        }
        if (x == r) return {NormalForm::Kind::RClass, Slope(0, 1)};
        if (!(hats.rhat1 < x && x < hats.rhat2))
            return {NormalForm::Kind::Representative, x};
        x = (x < r) ? reflect_edge(x, r, hats.rhat1) : reflect_edge(x, r, hats.rhat2);
    }
    throw std::runtime_error("orbit_normalize exceeded its step cap for s=" + s.str() +
                             ", r=" + r.str());
}

bool same_orbit_hat(const Slope& s, const Slope& s2, const Slope& r) {
    return orbit_normalize(s, r) == orbit_normalize(s2, r);
}

}  // namespace heckoid
