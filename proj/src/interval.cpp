#include "heckoid/interval.hpp"

#include <stdexcept>

namespace heckoid {

bool SlopeInterval::contains(const Slope& s) const {
    if (s < lo || s > hi) return false;
    if (s == lo && !lo_closed) return false;
    if (s == hi && !hi_closed) return false;
    return true;
}

std::string SlopeInterval::str() const {
    std::string out;
    out += lo_closed ? '[' : '(';
    out += lo.str();
    out += ',';
    out += hi.str();
    out += hi_closed ? ']' : ')';
    return out;
}

SlopeInterval make_interval(Slope lo, Slope hi, bool lo_closed, bool hi_closed) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    if (lo == hi && !(lo_closed && hi_closed))
        throw std::invalid_argument("degenerate interval must be closed");
    return SlopeInterval{lo, hi, lo_closed, hi_closed};
}

HeckoidParams::HeckoidParams(Slope r_, int n_) : r(r_), n(n_) {
    if (n < 2) throw std::domain_error("index n must be an integer >= 2");
    if (r.is_infinity() || !(Slope(0, 1) < r && r < Slope(1, 1)))
        throw std::domain_error("slope must lie strictly between 0 and 1, got " + r.str());
    cf = cf_expand(r);
    if (cf.size() < 2)
        throw std::domain_error("slope " + r.str() + " is 1/p; excluded here");
}

IntervalPair heckoid_intervals(const HeckoidParams& p) {
    const auto& t = p.cf.terms;
    std::size_t k = t.size();
    std::vector<std::int64_t> dec(t.begin(), t.end());  // [m1..m_{k-1}, m_k - 1, 2]
    dec[k - 1] -= 1;
    dec.push_back(2);
    std::vector<std::int64_t> ext(t.begin(), t.end());  // [m1..m_k, 2n-2]
    ext.push_back(2 * p.n - 2);
    Slope zero(0, 1), one(1, 1);
    if (k % 2 == 0) {
        return {make_interval(zero, cf_value(dec), true, true),
                make_interval(cf_value(ext), one, false, true)};
    }
    return {make_interval(zero, cf_value(ext), true, false),
            make_interval(cf_value(dec), one, true, true)};
}

BaseEndpoints base_endpoints(const Slope& r) {
    ContinuedFraction cf = cf_expand(r);
    const auto& t = cf.terms;
    std::size_t k = t.size();
    if (k < 2) throw std::domain_error("slope " + r.str() + " is integral or 1/p");
    std::vector<std::int64_t> drop(t.begin(), t.end() - 1);  // [m1..m_{k-1}]
    std::vector<std::int64_t> dec(t.begin(), t.end());       // [m1..m_{k-1}, m_k - 1]
    dec[k - 1] -= 1;
    Slope a = cf_value(dec), b = cf_value(drop);
    if (k % 2 == 0) return {a, b};
    return {b, a};
}

IntervalPair base_intervals(const Slope& r) {
    BaseEndpoints e = base_endpoints(r);
    return {make_interval(Slope(0, 1), e.rhat1, true, true),
            make_interval(e.rhat2, Slope(1, 1), true, true)};
}

}  // namespace heckoid
