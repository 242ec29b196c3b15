#include "swapsensus/oracle.hpp"

#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "swapsensus/report.hpp"
#include "swapsensus/sh_metric.hpp"
#include "swapsensus/swap_algebra.hpp"

namespace swapsensus {

namespace {

constexpr std::size_t infinite = std::numeric_limits<std::size_t>::max();

std::uint64_t resolve_cap(const OracleQuery& q)
{
    if (q.cap)
        return *q.cap;
    if (const char* env = std::getenv("SWAPSENSUS_ORACLE_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
    }
    return default_oracle_cap;
}

/// Score of one candidate; lower is better, `infinite` rejects it.
class Evaluator
{
public:
    explicit Evaluator(const OracleQuery& q) : _q(q)
    {
        for (const auto& w : q.instance.words())
            _words.push_back(w.symbols());
        _budgets = q.budgets.value_or(std::vector<std::size_t>(_words.size(), 0));
        if (_budgets.size() != _words.size())
            throw LengthMismatch("oracle: " + std::to_string(_budgets.size()) + " budgets for "
                                 + std::to_string(_words.size()) + " words");
        const std::size_t sigma = q.instance.alphabet().size();
        const std::size_t n = q.instance.length();
        _total = 1;
        const std::uint64_t cap = resolve_cap(q);
        for (std::size_t p = 0; p < n; ++p) {
            if (_total > cap / sigma)
                throw CapExceeded("oracle: " + std::to_string(sigma) + "^" + std::to_string(n)
                                  + " words exceed the cap of " + std::to_string(cap));
            _total *= sigma;
        }
        if (_total > cap)
            throw CapExceeded("oracle: search space exceeds the cap of " + std::to_string(cap));
    }

    std::uint64_t total() const noexcept { return _total; }

    std::u32string word_at(std::uint64_t index) const
    {
        const auto& alphabet = _q.instance.alphabet();
        const std::size_t sigma = alphabet.size();
        std::u32string w(_q.instance.length(), U'\0');
        for (std::size_t p = w.size(); p-- > 0;) {
            w[p] = alphabet[index % sigma];
            index /= sigma;
        }
        return w;
    }

    std::size_t score(const std::u32string& cand) const
    {
        std::size_t max = 0;
        std::size_t sum = 0;
        for (std::size_t j = 0; j < _words.size(); ++j) {
            const std::size_t dj = distance(cand, _words[j]);
            if (dj == infinite)
                return infinite;
            max = std::max(max, dj + _budgets[j]);
            sum += dj + _budgets[j];
        }
        switch (_q.objective) {
        case Objective::radius: return max;
        case Objective::sum: return sum;
        case Objective::radius_sum: return _q.d && max > *_q.d ? infinite : sum;
        }
        return infinite;
    }

    ConsensusAnswer finish(std::size_t best, std::uint64_t best_index, SearchStats stats) const
    {
        stats.oracle_enumerated = _total;
        if (best == infinite)
            return make_infeasible_answer(_q.metric == Metric::swap
                                              ? "no common matching word"
                                              : "no word within the radius bound",
                                          stats);
        auto answer = make_feasible_answer(_q.instance, Word(word_at(best_index)), _q.metric, stats);
        std::size_t max = 0;
        std::size_t sum = 0;
        for (std::size_t j = 0; j < _words.size(); ++j) {
            max = std::max(max, answer.distances[j] + _budgets[j]);
            sum += answer.distances[j] + _budgets[j];
        }
        if (_q.objective != Objective::sum && _q.d && max > *_q.d)
            return make_infeasible_answer("smallest achievable radius is " + std::to_string(max),
                                          stats);
        if (_q.objective != Objective::radius && _q.D && sum > *_q.D)
            return make_infeasible_answer("smallest achievable sum is " + std::to_string(sum),
                                          stats);
        return answer;
    }

private:
    std::size_t distance(const std::u32string& a, const std::u32string& b) const
    {
        switch (_q.metric) {
        case Metric::hamming: {
            std::size_t d = 0;
            for (std::size_t p = 0; p < a.size(); ++p)
                d += a[p] != b[p];
            return d;
        }
        case Metric::swap: return swap_distance(Word(a), Word(b)).value_or(infinite);
        case Metric::swap_hamming: return sh_cost(a, b);
        }
        return infinite;
    }

    const OracleQuery& _q;
    std::vector<std::u32string> _words;
    std::vector<std::size_t> _budgets;
    std::uint64_t _total = 0;
};

/// Draw in [0, bound) by rejection, identical on every standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = rng();
    while (v >= limit)
        v = rng();
    return v % bound;
}

} // namespace

ConsensusAnswer brute_force_serial(const OracleQuery& q)
{
    Stopwatch watch;
    Evaluator eval(q);
    std::size_t best = infinite;
    std::uint64_t best_index = 0;
    for (std::uint64_t i = 0; i < eval.total(); ++i) {
        const std::size_t s = eval.score(eval.word_at(i));
        if (s < best) {
            best = s;
            best_index = i;
        }
    }
    SearchStats stats;
    stats.elapsed = watch.elapsed();
    return eval.finish(best, best_index, stats);
}

ConsensusAnswer brute_force(const OracleQuery& q)
{
    Stopwatch watch;
    Evaluator eval(q);
    const auto total = static_cast<std::int64_t>(eval.total());
    std::size_t best = infinite;
    std::uint64_t best_index = 0;

#pragma omp parallel
    {
        std::size_t local = infinite;
        std::uint64_t local_index = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < total; ++i) {
            const std::size_t s = eval.score(eval.word_at(static_cast<std::uint64_t>(i)));
            if (s < local) {
                local = s;
                local_index = static_cast<std::uint64_t>(i);
            }
        }
#pragma omp critical
        {
            if (local < best || (local == best && local != infinite && local_index < best_index)) {
                best = local;
                best_index = local_index;
            }
        }
    }
    SearchStats stats;
    stats.elapsed = watch.elapsed();
    return eval.finish(best, best_index, stats);
}

Instance dollar_pad(const Instance& inst)
{
    if (inst.contains_symbol(U'$'))
        throw ReservedSymbolPresent("dollar_pad: `$` already occurs in the instance");
    std::vector<Word> out;
    for (const auto& w : inst.words()) {
        std::u32string padded;
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (p > 0)
                padded += U'$';
            padded += w[p];
        }
        out.emplace_back(std::move(padded));
    }
    return Instance(std::move(out));
}

PlantedInstance gen_planted(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t sigma,
                            std::size_t ops)
{
    if (sigma < 2 || sigma > 26)
        throw std::invalid_argument("gen_planted: sigma must lie in [2, 26]");
    if (n == 0 || k == 0)
        throw std::invalid_argument("gen_planted: n and k must be positive");
    std::mt19937_64 rng(seed);
    std::u32string center(n, U'\0');
    for (auto& c : center)
        c = U'a' + static_cast<Symbol>(bounded(rng, sigma));

    std::vector<Word> words;
    for (std::size_t j = 0; j < k; ++j) {
        std::u32string w = center;
        std::vector<bool> used(n, false);
        for (std::size_t op = 0; op < ops; ++op) {
            const std::size_t p = bounded(rng, n);
            const bool swap = bounded(rng, 2) == 1;
            if (swap) {
                if (p + 1 >= n || used[p] || used[p + 1] || w[p] == w[p + 1])
                    continue;
                std::swap(w[p], w[p + 1]);
                used[p] = used[p + 1] = true;
            } else {
                const auto shift = static_cast<Symbol>(1 + bounded(rng, sigma - 1));
                if (used[p])
                    continue;
                w[p] = U'a' + (w[p] - U'a' + shift) % static_cast<Symbol>(sigma);
                used[p] = true;
            }
        }
        words.emplace_back(std::move(w));
    }
    return PlantedInstance{Instance(std::move(words)), Word(std::move(center)), seed};
}

} // namespace swapsensus
