#include "heckoid/slope.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace heckoid {

namespace {

__int128 iabs(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t fit64(__int128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("slope arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(x);
}

}  // namespace

Slope make_slope_checked(__int128 n, __int128 d) {
    if (d == 0) {
        if (n == 0) throw std::domain_error("0/0 is not a slope");
        return Slope::infinity();
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Slope(fit64(n), fit64(d));
}

Slope::Slope(std::int64_t num, std::int64_t den) {
    Slope r = make_slope_checked(num, den);
    num_ = r.num_;
    den_ = r.den_;
}

bool Slope::in_unit_interval() const {
    return den_ != 0 && num_ >= 0 && num_ <= den_;
}

Slope operator+(const Slope& x, const Slope& y) {
    if (x.is_infinity() || y.is_infinity()) throw std::domain_error("infinity in slope arithmetic");
    return make_slope_checked((__int128)x.num_ * y.den_ + (__int128)y.num_ * x.den_,
                              (__int128)x.den_ * y.den_);
}

Slope operator-(const Slope& x, const Slope& y) {
    if (x.is_infinity() || y.is_infinity()) throw std::domain_error("infinity in slope arithmetic");
    return make_slope_checked((__int128)x.num_ * y.den_ - (__int128)y.num_ * x.den_,
                              (__int128)x.den_ * y.den_);
}

Slope operator*(const Slope& x, const Slope& y) {
    if (x.is_infinity() || y.is_infinity()) throw std::domain_error("infinity in slope arithmetic");
    return make_slope_checked((__int128)x.num_ * y.num_, (__int128)x.den_ * y.den_);
}

Slope operator/(const Slope& x, const Slope& y) {
    if (x.is_infinity() || y.is_infinity()) throw std::domain_error("infinity in slope arithmetic");
    if (y.num_ == 0) throw std::domain_error("division by zero slope");
    return make_slope_checked((__int128)x.num_ * y.den_, (__int128)x.den_ * y.num_);
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (is_infinity() && o.is_infinity()) return std::strong_ordering::equal;
    if (is_infinity()) return std::strong_ordering::greater;
    if (o.is_infinity()) return std::strong_ordering::less;
    __int128 lhs = (__int128)num_ * o.den_;
    __int128 rhs = (__int128)o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Slope::str() const {
    if (is_infinity()) return "1/0";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Slope parse_slope(std::string_view text) {
    auto parse_int = [](std::string_view t) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size())
            throw std::invalid_argument("bad slope: '" + std::string(t) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
    std::int64_t q = parse_int(text.substr(0, slash));
    std::int64_t p = parse_int(text.substr(slash + 1));
    if (p == 0) {
        if (q == 0) throw std::invalid_argument("bad slope: '0/0'");
        return Slope::infinity();
    }
    return Slope(q, p);
}

Slope mirror(const Slope& s) {
    if (s.is_infinity()) throw std::domain_error("mirror of infinity");
    return Slope(1, 1) - s;
}

Slope mediant(const Slope& a, const Slope& b) {
    return make_slope_checked((__int128)a.num() + b.num(), (__int128)a.den() + b.den());
}

bool is_farey_edge(const Slope& a, const Slope& b) {
    __int128 d = (__int128)a.num() * b.den() - (__int128)b.num() * a.den();
    return d == 1 || d == -1;
}

}  // namespace heckoid
