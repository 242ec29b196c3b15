// swap_pipeline.hpp -- consensus under the swap distance, solved by
// disentangling, encoding as swap strings and running a Hamming solver

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapsensus/core.hpp"
#include "swapsensus/disentangle.hpp"
#include "swapsensus/swap_algebra.hpp"

namespace swapsensus {

/// Intermediate results of one pipeline run, filled as far as the run got.
struct SwapPipelineTrace
{
    std::optional<Disentanglement> disentanglement;
    std::vector<SwapStr> encoded; ///< h_i = swap_string(s'_1, s'_i)
    std::optional<SwapStr> h_star;
    std::optional<Word> decoded;
};

/// Minimum total swap distance. h* is the column majority of the encoded
/// words. Infeasible when no word matches every input or when the optimum
/// exceeds `D`.
ConsensusAnswer sum_consensus_swap(const Instance& inst, std::optional<std::size_t> D = std::nullopt,
                                   SwapPipelineTrace* trace = nullptr);

/// A word within swap distance d of every input, found by the budgeted
/// Hamming branching on the encoded words.
ConsensusAnswer radius_consensus_swap(const Instance& inst, std::size_t d,
                                      SwapPipelineTrace* trace = nullptr);

/// Minimum-sum word within swap distance d of every input; Infeasible when
/// that sum exceeds `D`.
ConsensusAnswer rs_consensus_swap(const Instance& inst, std::size_t d,
                                  std::optional<std::size_t> D,
                                  SwapPipelineTrace* trace = nullptr);

} // namespace swapsensus
