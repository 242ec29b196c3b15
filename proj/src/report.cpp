#include "swapsensus/report.hpp"

#include <algorithm>
#include <numeric>

#include "swapsensus/sh_metric.hpp"
#include "swapsensus/swap_algebra.hpp"

namespace swapsensus {

std::size_t hamming_distance(const Word& s, const Word& t)
{
    if (s.size() != t.size())
        throw LengthMismatch("hamming_distance: lengths " + std::to_string(s.size()) + " and "
                             + std::to_string(t.size()));
    std::size_t d = 0;
    for (std::size_t p = 0; p < s.size(); ++p)
        d += s[p] != t[p];
    return d;
}

std::optional<std::size_t> distance(Metric m, const Word& s, const Word& t)
{
    switch (m) {
    case Metric::hamming: return hamming_distance(s, t);
    case Metric::swap: return swap_distance(s, t);
    case Metric::swap_hamming: return sh_distance(s, t).cost;
    }
    return std::nullopt;
}

ConsensusAnswer make_feasible_answer(const Instance& inst, Word solution, Metric m,
                                     SearchStats stats)
{
    ConsensusAnswer a;
    a.status = Status::feasible;
    a.distances.reserve(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto d = distance(m, inst[i], solution);
        if (!d)
            throw CertificationFailure("witness " + solution.to_utf8() + " does not match word "
                                       + std::to_string(i + 1));
        a.distances.push_back(*d);
    }
    a.max_distance = *std::max_element(a.distances.begin(), a.distances.end());
    a.sum_distance = std::accumulate(a.distances.begin(), a.distances.end(), std::size_t{0});
    a.solution = std::move(solution);
    a.stats = stats;
    return a;
}

ConsensusAnswer make_infeasible_answer(std::string reason, SearchStats stats)
{
    ConsensusAnswer a;
    a.status = Status::infeasible;
    a.reason = std::move(reason);
    a.stats = stats;
    return a;
}

} // namespace swapsensus
