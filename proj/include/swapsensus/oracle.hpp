// oracle.hpp -- exhaustive reference solver, reduction gadgets and seeded
// instance generation

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

inline constexpr std::uint64_t default_oracle_cap = 2'000'000;

/// `budgets`, when present, are added to every distance before the radius
/// and sum bounds are checked (the reported distances exclude them).
struct OracleQuery
{
    Instance instance;
    Metric metric = Metric::hamming;
    Objective objective = Objective::sum;
    std::optional<std::size_t> d;
    std::optional<std::size_t> D;
    std::optional<std::vector<std::size_t>> budgets;
    /// Largest |alphabet|^n accepted; defaults to SWAPSENSUS_ORACLE_CAP or
    /// default_oracle_cap.
    std::optional<std::uint64_t> cap;
};

/// Enumerates every word of length n over the instance alphabet.
///
/// radius: minimises the largest distance; sum: minimises the total;
/// radius_sum: minimises the total among words within d. Ties go to the
/// lexicographically smallest word. The answer is Infeasible when no word
/// has finite distances, or the optimum breaks d (radius objectives) or D
/// (sum objectives).
/// Throws CapExceeded when the search space is larger than the cap.
ConsensusAnswer brute_force(const OracleQuery& q);

/// Single-threaded reference of brute_force; same answers.
ConsensusAnswer brute_force_serial(const OracleQuery& q);

/// Interleaves a `$` column between every two columns. Throws
/// ReservedSymbolPresent if `$` already occurs.
Instance dollar_pad(const Instance& inst);

struct PlantedInstance
{
    Instance instance;
    Word center;
    std::uint64_t seed;
};

/// Draws a center over the first `sigma` lowercase letters and derives each
/// of the k words by at most `ops` position-disjoint swaps or substitutions,
/// so every word is within Swap+Hamming distance `ops` of the center.
/// Deterministic for a seed on every platform.
PlantedInstance gen_planted(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t sigma,
                            std::size_t ops);

} // namespace swapsensus
