#pragma once

#include <string>
#include <vector>

#include "heckoid/slope.hpp"
#include "heckoid/word.hpp"

namespace heckoid {

// Sequences of sign-run lengths. RunSeq is linear (word ends are hard
// boundaries); CyclicRunSeq merges the wrap-around run and compares up to
// rotation.
using RunSeq = std::vector<int>;

std::string runseq_str(const RunSeq& r);  // "(3,2,3)"

struct CyclicRunSeq {
    // Natural representative: runs listed from the first cyclic run boundary
    // at or after position 0 of the word it came from. A word whose letters
    // all share one sign yields the single run <len>.
    RunSeq terms;

    std::size_t size() const { return terms.size(); }
    int sum() const;
    RunSeq least_rotation() const;
    bool operator==(const CyclicRunSeq& o) const;
    std::string str() const;  // U+27E8/27E9 angle brackets
};

// Linear run lengths, left to right. Rejects the empty word.
RunSeq s_seq(const Word& w);

// Cyclic run sequence of a cyclic word; the sum of terms is the word length.
CyclicRunSeq cs_of_word(const CyclicWord& w);

// cs_of_word(u_word(s)) for s in [0,1].
CyclicRunSeq cs_of_slope(const Slope& s);

// The block-count sequence of cs_of_slope(s): with s = [l1, l2, ...] and
// c = l1, counts cyclic blocks of consecutive (c+1)'s when l2 == 1, and of
// consecutive c's when l2 >= 2. A one-term expansion [p] has cs <p,p> and
// yields <2>. Undefined for 0 and 1.
CyclicRunSeq ct_of_slope(const Slope& s);

}  // namespace heckoid
