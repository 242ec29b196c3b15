#include "swapsensus/hamming.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "swapsensus/report.hpp"

namespace swapsensus {

namespace {

std::vector<std::u32string> raw_words(const Instance& inst)
{
    std::vector<std::u32string> out;
    out.reserve(inst.size());
    for (const auto& w : inst.words())
        out.push_back(w.symbols());
    return out;
}

std::size_t mismatches(std::u32string_view a, std::u32string_view b)
{
    std::size_t d = 0;
    for (std::size_t p = 0; p < a.size(); ++p)
        d += a[p] != b[p];
    return d;
}

/// Returns the first budget violating x <= d, if any.
std::optional<std::size_t> over_budget(const std::vector<std::size_t>& budgets, std::size_t d)
{
    for (std::size_t i = 0; i < budgets.size(); ++i)
        if (budgets[i] > d)
            return i;
    return std::nullopt;
}

class RadiusSearch
{
public:
    RadiusSearch(std::vector<std::u32string> words, std::vector<std::size_t> slack,
                 SearchStats& stats)
      : _words(std::move(words)), _slack(std::move(slack)), _stats(stats)
    {
    }

    bool run(std::u32string& cand, std::size_t depth_left, std::size_t depth)
    {
        ++_stats.nodes_expanded;
        _stats.max_depth = std::max(_stats.max_depth, depth);

        std::optional<std::size_t> violated;
        for (std::size_t j = 0; j < _words.size(); ++j) {
            const std::size_t dj = mismatches(cand, _words[j]);
            // each remaining step moves the candidate by one position
            if (dj > _slack[j] + depth_left)
                return false;
            if (!violated && dj > _slack[j])
                violated = j;
        }
        if (!violated)
            return true;
        if (depth_left == 0)
            return false;

        const auto& target = _words[*violated];
        std::size_t branches = _slack[*violated] + 1;
        for (std::size_t p = 0; p < cand.size() && branches > 0; ++p) {
            if (cand[p] == target[p])
                continue;
            --branches;
            const Symbol old = cand[p];
            cand[p] = target[p];
            if (run(cand, depth_left - 1, depth + 1))
                return true;
            cand[p] = old;
        }
        return false;
    }

private:
    std::vector<std::u32string> _words;
    std::vector<std::size_t> _slack;
    SearchStats& _stats;
};

/// Depth-first walk over column-restricted words in lexicographic order.
class RadiusSumSearch
{
public:
    RadiusSumSearch(const Instance& inst, std::vector<std::size_t> slack,
                    std::optional<std::size_t> sum_cap, SearchStats& stats)
      : _words(raw_words(inst)), _slack(std::move(slack)), _sum_cap(sum_cap), _stats(stats),
        _n(inst.length()), _k(inst.size())
    {
        const auto& base = _words.front();
        _columns.reserve(_n);
        for (std::size_t p = 0; p < _n; ++p)
            _columns.push_back(inst.column(p));

        // suffix Hamming distance from the root word to each word
        _suffix_ham.assign(_k, std::vector<std::size_t>(_n + 1, 0));
        for (std::size_t j = 0; j < _k; ++j)
            for (std::size_t p = _n; p-- > 0;)
                _suffix_ham[j][p] = _suffix_ham[j][p + 1] + (base[p] != _words[j][p]);

        // admissible sum bound: the best any single column can do
        _suffix_colmin.assign(_n + 1, 0);
        for (std::size_t p = _n; p-- > 0;) {
            std::size_t best = _k;
            for (Symbol c : _columns[p]) {
                std::size_t miss = 0;
                for (const auto& w : _words)
                    miss += w[p] != c;
                best = std::min(best, miss);
            }
            _suffix_colmin[p] = _suffix_colmin[p + 1] + best;
        }
    }

    std::optional<std::u32string> run()
    {
        std::u32string cand(_n, U'\0');
        std::vector<std::size_t> dist(_k, 0);
        dfs(0, _slack.front(), cand, dist, 0);
        return _best;
    }

private:
    void dfs(std::size_t p, std::size_t changes_left, std::u32string& cand,
             std::vector<std::size_t>& dist, std::size_t sum)
    {
        ++_stats.nodes_expanded;
        _stats.max_depth = std::max(_stats.max_depth, _slack.front() - changes_left);
        if (p == _n) {
            if (!_best || sum < _best_sum) {
                _best = cand;
                _best_sum = sum;
            }
            return;
        }
        const Symbol root = _words.front()[p];
        for (Symbol c : _columns[p]) {
            const bool change = c != root;
            if (change && changes_left == 0)
                continue;
            const std::size_t left = changes_left - (change ? 1 : 0);

            std::size_t new_sum = sum;
            bool ok = true;
            for (std::size_t j = 0; j < _k && ok; ++j) {
                const std::size_t dj = dist[j] + (c != _words[j][p]);
                const std::size_t rest = _suffix_ham[j][p + 1];
                const std::size_t lower = dj + (rest > left ? rest - left : 0);
                ok = lower <= _slack[j];
                new_sum += c != _words[j][p];
            }
            if (!ok)
                continue;
            const std::size_t bound = new_sum + _suffix_colmin[p + 1];
            // words reached later are lexicographically larger, so ties lose
            if (_best && bound >= _best_sum)
                continue;
            if (_sum_cap && bound > *_sum_cap)
                continue;

            for (std::size_t j = 0; j < _k; ++j)
                dist[j] += c != _words[j][p];
            cand[p] = c;
            dfs(p + 1, left, cand, dist, new_sum);
            for (std::size_t j = 0; j < _k; ++j)
                dist[j] -= c != _words[j][p];
        }
    }

    std::vector<std::u32string> _words;
    std::vector<std::size_t> _slack;
    std::optional<std::size_t> _sum_cap;
    SearchStats& _stats;
    std::size_t _n;
    std::size_t _k;
    std::vector<std::vector<Symbol>> _columns;
    std::vector<std::vector<std::size_t>> _suffix_ham;
    std::vector<std::size_t> _suffix_colmin;
    std::optional<std::u32string> _best;
    std::size_t _best_sum = std::numeric_limits<std::size_t>::max();
};

PaddedInstance pad_words(const BudgetedInstance& b, std::size_t d, std::optional<std::size_t> D)
{
    const Instance& inst = b.instance;
    if (inst.contains_symbol(U'0') || inst.contains_symbol(U'1'))
        throw ReservedSymbolPresent("pad_mixed: symbols 0 and 1 are reserved for padding");
    const std::size_t x = b.max_budget();
    std::vector<Word> a_side;
    std::vector<Word> b_side;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        std::u32string a_pad;
        std::u32string b_pad;
        for (std::size_t r = 0; r < x; ++r) {
            const bool used = r < b.budgets[i];
            a_pad += used ? U"01" : U"00";
            b_pad += used ? U"10" : U"00";
        }
        a_side.emplace_back(inst[i].symbols() + a_pad);
        b_side.emplace_back(inst[i].symbols() + b_pad);
    }
    a_side.insert(a_side.end(), b_side.begin(), b_side.end());
    std::optional<std::size_t> doubled;
    if (D)
        doubled = 2 * *D;
    return PaddedInstance{Instance(std::move(a_side)), d, doubled};
}

} // namespace

Word column_majority(const Instance& inst)
{
    std::u32string out(inst.length(), U'\0');
    std::map<Symbol, std::size_t> counts;
    for (std::size_t p = 0; p < inst.length(); ++p) {
        counts.clear();
        for (const auto& w : inst.words())
            ++counts[w[p]];
        // map iterates in symbol order, so strict > keeps the smallest on ties
        std::size_t best = 0;
        for (const auto& [sym, count] : counts) {
            if (count > best) {
                best = count;
                out[p] = sym;
            }
        }
    }
    return Word(std::move(out));
}

ConsensusAnswer sum_consensus_ham(const Instance& inst)
{
    Stopwatch watch;
    SearchStats stats;
    Word w = column_majority(inst);
    stats.elapsed = watch.elapsed();
    return make_feasible_answer(inst, std::move(w), Metric::hamming, stats);
}

ConsensusAnswer radius_consensus_ham_mixed(const MixedRadiusQuery& q)
{
    Stopwatch watch;
    SearchStats stats;
    const auto& budgets = q.budgeted.budgets;
    if (auto i = over_budget(budgets, q.d))
        return make_infeasible_answer("budget of word " + std::to_string(*i + 1)
                                          + " exceeds the radius",
                                      stats);
    std::vector<std::size_t> slack(budgets.size());
    for (std::size_t i = 0; i < budgets.size(); ++i)
        slack[i] = q.d - budgets[i];

    const Instance& inst = q.budgeted.instance;
    std::u32string cand = inst[0].symbols();
    RadiusSearch search(raw_words(inst), slack, stats);
    const bool found = search.run(cand, slack.front(), 0);
    stats.elapsed = watch.elapsed();
    if (!found)
        return make_infeasible_answer("no word within the per-word radius bounds", stats);

    auto answer = make_feasible_answer(inst, Word(std::move(cand)), Metric::hamming, stats);
    for (std::size_t i = 0; i < slack.size(); ++i)
        if (answer.distances[i] > slack[i])
            throw CertificationFailure("radius witness exceeds the slack of word "
                                       + std::to_string(i + 1));
    return answer;
}

ConsensusAnswer radius_consensus_ham(const Instance& inst, std::size_t d)
{
    return radius_consensus_ham_mixed(
        MixedRadiusQuery{BudgetedInstance(inst, std::vector<std::size_t>(inst.size(), 0)), d});
}

ConsensusAnswer rs_consensus_ham_mixed(const MixedRadiusSumQuery& q)
{
    Stopwatch watch;
    SearchStats stats;
    const auto& budgets = q.budgeted.budgets;
    if (auto i = over_budget(budgets, q.d))
        return make_infeasible_answer("budget of word " + std::to_string(*i + 1)
                                          + " exceeds the radius",
                                      stats);
    const std::size_t total = q.budgeted.total_budget();
    std::optional<std::size_t> cap;
    if (q.D) {
        if (total > *q.D)
            return make_infeasible_answer("budgets already exceed the sum bound", stats);
        cap = *q.D - total;
    }
    std::vector<std::size_t> slack(budgets.size());
    for (std::size_t i = 0; i < budgets.size(); ++i)
        slack[i] = q.d - budgets[i];

    const Instance& inst = q.budgeted.instance;
    RadiusSumSearch search(inst, slack, cap, stats);
    auto best = search.run();
    stats.elapsed = watch.elapsed();
    if (!best)
        return make_infeasible_answer(cap ? "no word meets both the radius and the sum bound"
                                          : "no word within the per-word radius bounds",
                                      stats);

    auto answer = make_feasible_answer(inst, Word(std::move(*best)), Metric::hamming, stats);
    for (std::size_t i = 0; i < slack.size(); ++i)
        if (answer.distances[i] > slack[i])
            throw CertificationFailure("radius+sum witness exceeds the slack of word "
                                       + std::to_string(i + 1));
    if (cap && answer.sum_distance > *cap)
        throw CertificationFailure("radius+sum witness exceeds the sum bound");
    return answer;
}

PaddedInstance pad_mixed(const MixedRadiusSumQuery& q)
{
    return pad_words(q.budgeted, q.d, q.D);
}

PaddedInstance pad_mixed(const MixedRadiusQuery& q)
{
    return pad_words(q.budgeted, q.d, std::nullopt);
}

} // namespace swapsensus
