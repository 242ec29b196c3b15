// hamming.hpp -- Hamming consensus: sum, radius, radius+sum and their
// budgeted ("mixed") variants

#pragma once

#include <cstddef>
#include <optional>

#include "swapsensus/core.hpp"

namespace swapsensus {

/// Radius consensus where word i may only use d - budgets[i] of the radius.
struct MixedRadiusQuery
{
    BudgetedInstance budgeted;
    std::size_t d;
};

/// Radius plus sum: the Hamming sum must not exceed D - sum(budgets).
/// Without D the solver simply minimises the sum under the radius bound.
struct MixedRadiusSumQuery
{
    BudgetedInstance budgeted;
    std::size_t d;
    std::optional<std::size_t> D;
};

/// Per-column majority, ties broken towards the smaller symbol. This is the
/// lexicographically smallest optimal Hamming sum consensus.
Word column_majority(const Instance& inst);

ConsensusAnswer sum_consensus_ham(const Instance& inst);

/// Bounded search tree rooted at the first word. At each node the first
/// word over its slack is taken and the candidate branches on that word's
/// first slack+1 mismatch positions, left to right. The first witness found
/// is returned. Budgets above d make the query infeasible.
ConsensusAnswer radius_consensus_ham_mixed(const MixedRadiusQuery& q);

/// Plain closest string: radius_consensus_ham_mixed with zero budgets.
ConsensusAnswer radius_consensus_ham(const Instance& inst, std::size_t d);

/// Exact minimum-sum witness under the per-word radius bounds
/// (lexicographically smallest among minimum sums).
///
/// Searches the Hamming ball around the first word, using only symbols that
/// occur in each column; an out-of-column symbol can always be replaced by
/// the column majority without increasing any distance.
ConsensusAnswer rs_consensus_ham_mixed(const MixedRadiusSumQuery& q);

struct PaddedInstance
{
    Instance instance;
    std::size_t d;
    std::optional<std::size_t> D; ///< 2*D when the query had a sum bound
};

/// Encodes the budgets into the words themselves: word s becomes s.a_s and
/// s.b_s with a_s = (01)^x_s (00)^(x-x_s), b_s = (10)^x_s (00)^(x-x_s) and
/// x the largest budget. Feasibility is preserved under radius d (and sum
/// 2D). Throws ReservedSymbolPresent if `0` or `1` already occurs.
PaddedInstance pad_mixed(const MixedRadiusSumQuery& q);
PaddedInstance pad_mixed(const MixedRadiusQuery& q);

} // namespace swapsensus
