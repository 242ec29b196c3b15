#include "swapsensus/sh_radius.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "swapsensus/report.hpp"
#include "swapsensus/sh_metric.hpp"

namespace swapsensus {

namespace {

std::size_t mismatches(std::u32string_view a, std::u32string_view b)
{
    std::size_t d = 0;
    for (std::size_t p = 0; p < a.size(); ++p)
        d += a[p] != b[p];
    return d;
}

class ShRadiusSearch
{
public:
    ShRadiusSearch(const Instance& inst, std::size_t d, SearchStats& stats)
      : _d(d), _stats(stats)
    {
        for (const auto& w : inst.words())
            _words.push_back(w.symbols());
    }

    bool run(std::u32string& cand, std::size_t depth)
    {
        ++_stats.nodes_expanded;
        _stats.max_depth = std::max(_stats.max_depth, depth);
        if (depth > 2 * _d)
            throw CertificationFailure("sh radius search went deeper than 2d");

        const std::size_t trim = 4 * _d + 1 - depth;
        const std::u32string* far = nullptr;
        for (const auto& w : _words) {
            if (mismatches(cand, w) >= trim)
                return false;
            if (far == nullptr && sh_cost(cand, w) > _d)
                far = &w;
        }
        if (far == nullptr)
            return true;
        if (depth == 2 * _d)
            return false;

        const auto& s = *far;
        std::vector<std::size_t> miss;
        for (std::size_t p = 0; p < cand.size(); ++p)
            if (cand[p] != s[p])
                miss.push_back(p);

        if (miss.size() >= 2 * _d + 1) {
            miss.resize(2 * _d + 1);
            for (std::size_t p : miss)
                if (substitute(cand, p, s[p], depth))
                    return true;
            return false;
        }
        if (miss.size() < _d + 1)
            throw CertificationFailure("sh radius: Hamming distance below d+1 for a far word");

        for (std::size_t p : miss)
            if (substitute(cand, p, s[p], depth))
                return true;
        for (std::size_t p : miss) {
            if (p + 1 < cand.size() && swap_in(cand, p, s[p + 1], s[p], depth))
                return true;
            if (p > 0 && swap_in(cand, p - 1, s[p], s[p - 1], depth))
                return true;
        }
        return false;
    }

private:
    bool substitute(std::u32string& cand, std::size_t p, Symbol c, std::size_t depth)
    {
        const Symbol old = cand[p];
        cand[p] = c;
        const bool found = run(cand, depth + 1);
        if (!found)
            cand[p] = old;
        return found;
    }

    /// Writes x y at positions p, p+1. Equal letters are not a swap and a
    /// move that leaves the candidate unchanged is skipped.
    bool swap_in(std::u32string& cand, std::size_t p, Symbol x, Symbol y, std::size_t depth)
    {
        if (x == y || (cand[p] == x && cand[p + 1] == y))
            return false;
        const Symbol ox = cand[p];
        const Symbol oy = cand[p + 1];
        cand[p] = x;
        cand[p + 1] = y;
        const bool found = run(cand, depth + 1);
        if (!found) {
            cand[p] = ox;
            cand[p + 1] = oy;
        }
        return found;
    }

    std::vector<std::u32string> _words;
    std::size_t _d;
    SearchStats& _stats;
};

} // namespace

ConsensusAnswer radius_consensus_sh(const Instance& inst, std::size_t d, ShRadiusOptions options)
{
    Stopwatch watch;
    SearchStats stats;
    ShRadiusSearch search(inst, d, stats);
    const std::size_t roots = options.all_roots ? inst.size() : 1;
    for (std::size_t r = 0; r < roots; ++r) {
        std::u32string cand = inst[r].symbols();
        if (!search.run(cand, 0))
            continue;
        stats.elapsed = watch.elapsed();
        auto answer = make_feasible_answer(inst, Word(std::move(cand)), Metric::swap_hamming, stats);
        if (answer.max_distance > d)
            throw CertificationFailure("sh radius witness exceeds d");
        return answer;
    }
    stats.elapsed = watch.elapsed();
    return make_infeasible_answer("no word within Swap+Hamming distance "
                                      + std::to_string(d) + " of every input",
                                  stats);
}

} // namespace swapsensus
