#pragma once

#include <vector>

#include "heckoid/context.hpp"

namespace heckoid {

// A piece is a common prefix of at least two distinct elements of the
// symmetrized set. Pieces are closed under taking subwords, so the longest
// piece starting at each position is all the decomposition search needs.
bool is_piece(const Word& w, const HeckoidContext& ctx);

// Longest piece that is a prefix of w[from..]; 0 when even the first letter
// matches at most one element.
int max_piece_prefix(const Word& w, std::size_t from, const HeckoidContext& ctx);

struct PieceDecomposition {
    int count = 0;              // minimum number of pieces covering w
    std::vector<int> cuts;      // cut positions of one optimal decomposition
    std::vector<int> dp;        // dp[i] = min pieces covering w[0..i)
};

// Minimum piece decomposition of a word that occurs in the cyclic relator
// (throws otherwise). Shortest-path DP over prefix positions; monotone along
// prefixes.
PieceDecomposition min_pieces(const Word& w, const HeckoidContext& ctx);

// A cyclic interval of the host word.
struct CommonSubword {
    int start = 0;
    int length = 0;
};

// Maximal subwords of the cyclic word v that occur in the cyclic relator word
// (in either orientation): for every start the longest common extension,
// pruned to the ones not contained in another. Capped at |v|.
std::vector<CommonSubword> relator_subwords_of(const CyclicWord& v, const SymmetrizedSet& set);
std::vector<CommonSubword> relator_subwords_of(const CyclicWord& v, const HeckoidContext& ctx);

// Sweep support: the longest match / longest piece starting at each cyclic
// position of the host, both capped at |host|.
std::vector<int> common_prefix_table(const CyclicWord& host, const SymmetrizedSet& set);
std::vector<int> piece_prefix_table(const CyclicWord& host, const HeckoidContext& ctx);

// Minimum pieces covering the cyclic interval [start, start+len) of the host,
// using a precomputed piece table.
int min_pieces_in(const CyclicWord& host, int start, int len, const std::vector<int>& piece_table);

}  // namespace heckoid
