// sh_metric.hpp -- the Swap+Hamming distance with an explicit edit script

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

/// Swaps (0-based left positions, ascending and pairwise non-adjacent)
/// followed by substitutions (0-based, ascending, untouched by any swap).
struct SHWitness
{
    std::vector<std::size_t> swaps;
    std::vector<std::size_t> substitutions;

    std::size_t cost() const noexcept { return swaps.size() + substitutions.size(); }
};

struct SHResult
{
    std::size_t cost;
    SHWitness witness;
};

/// Greedy left-to-right Swap+Hamming distance: a reversed pair at (i, i+1)
/// is taken as a swap unless a swap was taken at i-1; every other mismatch
/// is a substitution. The greedy cost is optimal. Throws LengthMismatch.
SHResult sh_distance(const Word& s, const Word& t);

/// Cost only; no allocation. Requires equal lengths.
std::size_t sh_cost(std::u32string_view s, std::u32string_view t);

} // namespace swapsensus
