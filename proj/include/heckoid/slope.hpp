#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace heckoid {

// Exact rational with checked 64-bit storage. A denominator of 0 encodes the
// point at infinity (1/0). Every operation is exact; a result that does not
// fit in 64 bits after reduction throws std::overflow_error instead of
// wrapping, so an overflow can never forge a wrong value.
class Slope {
public:
    constexpr Slope() = default;
    Slope(std::int64_t num, std::int64_t den);  // reduces, moves sign to num

    static Slope infinity() { return Slope(unchecked{}, 1, 0); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool in_unit_interval() const;  // 0 <= s <= 1, finite

    friend Slope operator+(const Slope& x, const Slope& y);
    friend Slope operator-(const Slope& x, const Slope& y);
    friend Slope operator*(const Slope& x, const Slope& y);
    friend Slope operator/(const Slope& x, const Slope& y);
    Slope operator-() const { return Slope(unchecked{}, -num_, den_); }

    // Total order with infinity as the largest element.
    std::strong_ordering operator<=>(const Slope& o) const;
    bool operator==(const Slope& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;  // "q/p", integers as "k", infinity as "1/0"

private:
    struct unchecked {};
    constexpr Slope(unchecked, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Parses "q/p" or a bare integer. Throws std::invalid_argument on bad input.
Slope parse_slope(std::string_view text);

// Builds the reduced slope n/d from wide intermediates, checking the fit.
Slope make_slope_checked(__int128 n, __int128 d);

// The involution s -> 1 - s. Requires a finite input.
Slope mirror(const Slope& s);

// Mediant (q+q')/(p+p') of two finite non-negative rationals.
Slope mediant(const Slope& a, const Slope& b);

// |q p' - q' p| == 1, i.e. the two slopes span an edge of the Farey
// tessellation. Infinity is a Farey neighbour of every integer.
bool is_farey_edge(const Slope& a, const Slope& b);

}  // namespace heckoid
