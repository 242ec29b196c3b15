// sh_radius.hpp -- radius consensus under the Swap+Hamming distance

#pragma once

#include <cstddef>

#include "swapsensus/core.hpp"

namespace swapsensus {

struct ShRadiusOptions
{
    /// Retry the search from every input word instead of only the first.
    bool all_roots = false;
};

/// Bounded search tree of depth 2d rooted at an input word (depth 0).
///
/// At each node the first word farther than d is taken. If the Hamming
/// distance to it is at least 2d+1 the candidate branches on substituting
/// one of the first 2d+1 mismatches; otherwise on substituting any mismatch
/// or swapping one in from either side. A node at depth i is pruned when
/// some word is at Hamming distance 4d-i+1 or more.
ConsensusAnswer radius_consensus_sh(const Instance& inst, std::size_t d,
                                    ShRadiusOptions options = {});

} // namespace swapsensus
