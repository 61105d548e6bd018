#pragma once

#include <string>
#include <vector>

#include "heckoid/context.hpp"

namespace heckoid {

// One relator replacement: the matched subword x (more than half of some
// element e = x y of the symmetrized set) was replaced by invert(y). Stored
// richly enough that each step can be re-verified syntactically:
// matched + invert(replacement) must be an element of the set.
struct DehnStep {
    int position = 0;        // start of the match in the word as it was then
    int replaced_len = 0;    // |x|
    int replacement_len = 0; // |y|
    std::string matched;
    std::string replacement;
};

struct DehnTrace {
    std::vector<DehnStep> steps;
    Word result;
    bool cyclic = false;

    bool reduced_to_empty() const { return result.empty(); }
};

// Greedy Dehn reduction: freely (and cyclically, when requested) reduce, then
// repeatedly replace the longest leftmost subword that matches more than half
// of a symmetrized element by the inverse of its complement. Each step
// strictly shortens the word, so this always terminates.
DehnTrace dehn_reduce(const Word& w, const HeckoidContext& ctx, bool cyclic);

// Syntactic soundness of a trace: every step's matched word concatenated with
// the inverse of its replacement is an element of the symmetrized set, and
// every step strictly shortens.
bool trace_is_sound(const DehnTrace& trace, const HeckoidContext& ctx);

}  // namespace heckoid
