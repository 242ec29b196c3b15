// report.hpp -- distance dispatch and certified answer construction

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

std::size_t hamming_distance(const Word& s, const Word& t);

/// Distance under `m`; nullopt stands for infinity (swap metric only).
std::optional<std::size_t> distance(Metric m, const Word& s, const Word& t);

/// Builds a feasible answer, recomputing every distance from `solution`.
/// Throws CertificationFailure if a distance is infinite.
ConsensusAnswer make_feasible_answer(const Instance& inst, Word solution, Metric m,
                                     SearchStats stats);

ConsensusAnswer make_infeasible_answer(std::string reason, SearchStats stats);

class Stopwatch
{
public:
    Stopwatch() : _start(std::chrono::steady_clock::now()) {}

    std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - _start; }

private:
    std::chrono::steady_clock::time_point _start;
};

} // namespace swapsensus
