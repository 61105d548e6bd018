#include "heckoid/continued_fraction.hpp"

#include <charconv>
#include <stdexcept>

namespace heckoid {

std::string ContinuedFraction::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(terms[i]);
    }
    return out + "]";
}

ContinuedFraction cf_expand(const Slope& s) {
    if (!s.in_unit_interval())
        throw std::domain_error("cf_expand needs a rational in [0,1], got " + s.str());
    ContinuedFraction cf;
    if (s.num() == 0) return cf;
    if (s.num() == s.den()) {
        cf.terms = {1};
        return cf;
    }
    // Euclid on (p, q); the final quotient is automatically >= 2 for a reduced
    // rational strictly inside (0, 1), which is exactly the canonical form.
    std::int64_t p = s.den(), q = s.num();
    while (q) {
        cf.terms.push_back(p / q);
        std::int64_t t = p % q;
        p = q;
        q = t;
    }
    return cf;
}

Slope cf_value(std::span<const std::int64_t> terms) {
    // Forward convergent recurrence for [0; m1, ..., mk]:
    //   h_{-1}=1, h_0=0;  k_{-1}=0, k_0=1;  h_i = m_i h_{i-1} + h_{i-2}, same for k.
    __int128 h1 = 1, h0 = 0, k1 = 0, k0 = 1;
    for (std::int64_t m : terms) {
        if (m <= 0) throw std::domain_error("continued fraction terms must be positive");
        __int128 h = (__int128)m * h0 + h1;
        __int128 k = (__int128)m * k0 + k1;
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
    }
    return make_slope_checked(h0, k0);
}

Slope cf_value(const ContinuedFraction& cf) { return cf_value(std::span(cf.terms)); }

ContinuedFraction parse_cf(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("bad continued fraction: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    ContinuedFraction cf;
    skip_ws();
    if (i < text.size() && text[i] == ']') return cf;
    while (true) {
        skip_ws();
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) fail();
        i = p - text.data();
        cf.terms.push_back(v);
        skip_ws();
        if (i >= text.size()) fail();
        if (text[i] == ']') break;
        if (text[i] != ',') fail();
        ++i;
    }
    for (std::int64_t m : cf.terms)
        if (m <= 0) fail();
    return cf;
}

Slope tilde(const Slope& s) {
    if (s.is_infinity() || s.num() == 0 || s == Slope(1, 1))
        throw std::domain_error("tilde is undefined for 0, 1 and infinity");
    ContinuedFraction cf = cf_expand(s);
    const auto& l = cf.terms;
    if (l.size() == 1) return Slope(0, 1);
    std::vector<std::int64_t> rest;
    if (l[1] == 1) {
        rest.assign(l.begin() + 2, l.end());
    } else {
        rest.assign(l.begin() + 1, l.end());
        rest[0] -= 1;
    }
    return cf_value(rest);
}

}  // namespace heckoid
