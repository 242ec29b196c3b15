// sh_sum.hpp -- exact sum consensus under the Swap+Hamming distance via a
// dynamic program over reachable swap sets

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

/// The words j (0-based, ascending) for which the greedy Swap+Hamming trace
/// between the prefix t[0..i] and s_j[0..i] swaps the pair (i-1, i).
/// Empty for i = 0. Throws OutOfRange unless i < n and i < |t|.
std::vector<std::size_t> swap_set(const Instance& inst, const Word& t, std::size_t i);

/// One stored table entry: the best prefix of length row+1 reaching `set`.
struct ShSumEntry
{
    std::vector<std::size_t> set; ///< 0-based word indices, ascending
    Word prefix;
    std::size_t cost; ///< summed distance to the length row+1 prefixes
};

/// Stored states per row, each row ordered by the indicator vector of `set`.
struct ShSumTable
{
    std::vector<std::vector<ShSumEntry>> rows;
};

/// Minimum-sum word, lexicographically smallest among optima. Infeasible
/// when the optimum exceeds `D`. When `table` is given it receives every
/// stored state.
ConsensusAnswer sum_consensus_sh(const Instance& inst, std::optional<std::size_t> D = std::nullopt,
                                 ShSumTable* table = nullptr);

} // namespace swapsensus
