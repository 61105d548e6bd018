#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "heckoid/decomposition.hpp"
#include "heckoid/run_sequence.hpp"

namespace heckoid {

// A pattern over run sequences: a fixed-length template of term constraints.
// Named blocks and repetitions are expanded at construction time, so matching
// only ever sees Exact / AtLeast / Any atoms. "Contains as a subsequence"
// always means a block of consecutive terms; a pattern never wraps the host
// more than once.
struct PatternAtom {
    enum class Kind { Exact, AtLeast, Any };
    Kind kind = Kind::Exact;
    int value = 0;

    bool admits(int term) const {
        switch (kind) {
            case Kind::Exact: return term == value;
            case Kind::AtLeast: return term >= value;
            default: return term >= 1;
        }
    }
};

using Pattern = std::vector<PatternAtom>;

Pattern pat_exact(const RunSeq& block);
Pattern pat_term(int v);
Pattern pat_at_least(int v);
Pattern pat_any();
Pattern pat_repeat(int count, const Pattern& body);
Pattern operator+(Pattern lhs, const Pattern& rhs);

std::string pattern_str(const Pattern& p);

struct PatternMatch {
    bool matched = false;
    int position = -1;  // first matching start (rotation index / linear offset)
};

// True iff some rotation of the host starts with the pattern. Patterns longer
// than the host never match.
PatternMatch match_pattern(const CyclicRunSeq& host, const Pattern& p);

// Linear variant: the pattern must fit inside the sequence.
PatternMatch match_linear(const RunSeq& host, const Pattern& p);

// Relax the two boundary atoms Exact(v) -> AtLeast(v), Any -> AtLeast(1).
// Used when the pattern describes the run shape of a subword that may cut
// into longer boundary runs of its host.
Pattern relax_ends(Pattern p);

// Text grammar, whitespace separated:
//   "3"          exact term
//   ">=4"        at-least term
//   "?"          any positive term
//   "S1" "S2" "S1b" "S1e" "S2b" "S2e"   named blocks from a decomposition
//   "2*(S1 S2)"  repetition of a parenthesized group
// Names require a decomposition; throws std::invalid_argument otherwise.
Pattern parse_pattern(std::string_view text, const SRDecomp* decomp = nullptr,
                      const Affixes* affixes = nullptr);

}  // namespace heckoid
