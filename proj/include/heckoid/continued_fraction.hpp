#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

// Continued fractions here always have the shape 1/(m1 + 1/(m2 + ...)) with
// every term positive, so all values lie in [0, 1]. The canonical expansion
// of a rational in (0, 1) has its last term >= 2; the empty sequence is 0 and
// the single term [1] is the dedicated representation of 1.
struct ContinuedFraction {
    std::vector<std::int64_t> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    std::string str() const;  // "[m1,m2,...]", "[]" for zero
};

// Canonical expansion of a reduced rational in [0,1]. Rejects anything else.
ContinuedFraction cf_expand(const Slope& s);

// Value of an arbitrary positive-term sequence (need not be canonical).
// The empty sequence evaluates to 0. Throws on a term <= 0.
Slope cf_value(std::span<const std::int64_t> terms);
Slope cf_value(const ContinuedFraction& cf);

// Parses "[m1,m2,...]" (whitespace tolerated). Throws std::invalid_argument.
ContinuedFraction parse_cf(std::string_view text);

// The reduction s -> s~ that removes the leading block of the expansion:
//   [l1]            -> 0
//   [l1, 1, l3...]  -> value of [l3, ...]
//   [l1, l2, ...]   -> value of [l2 - 1, l3, ...]   (l2 >= 2)
// Defined for s strictly between 0 and 1.
Slope tilde(const Slope& s);

}  // namespace heckoid
