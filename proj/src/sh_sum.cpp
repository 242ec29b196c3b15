#include "swapsensus/sh_sum.hpp"

#include <map>
#include <string>
#include <tuple>

#include "swapsensus/hamming.hpp"
#include "swapsensus/report.hpp"

namespace swapsensus {

namespace {

/// Indicator vector of a swap set: character j is '1' iff word j swaps.
using SetKey = std::string;

struct State
{
    std::u32string prefix;
    std::size_t cost;
};

using Row = std::map<SetKey, State>;

std::vector<std::size_t> members(const SetKey& key)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < key.size(); ++j)
        if (key[j] == '1')
            out.push_back(j);
    return out;
}

class ShSumDP
{
public:
    ShSumDP(const Instance& inst, const Word& ham_center)
      : _n(inst.length()), _k(inst.size()), _center(ham_center.symbols()), _rows(inst.length())
    {
        for (const auto& w : inst.words())
            _words.push_back(w.symbols());
    }

    /// Appends c to a prefix of length r+1 whose last pair swaps with `key`;
    /// returns the new key and the cost increase.
    std::pair<SetKey, std::size_t> step(const std::u32string& prefix, const SetKey& key,
                                        Symbol c) const
    {
        const std::size_t r = prefix.size() - 1;
        SetKey out(_k, '0');
        std::size_t delta = 0;
        for (std::size_t j = 0; j < _k; ++j) {
            const auto& s = _words[j];
            if (key[j] == '0' && s[r] != s[r + 1] && prefix[r] == s[r + 1] && c == s[r])
                out[j] = '1';
            else
                delta += c != s[r + 1];
        }
        return {std::move(out), delta};
    }

    void offer(std::size_t row, const SetKey& key, std::u32string prefix, std::size_t cost)
    {
        auto [it, inserted] = _rows[row].try_emplace(key, State{prefix, cost});
        if (!inserted && std::tie(cost, prefix) < std::tie(it->second.cost, it->second.prefix))
            it->second = State{std::move(prefix), cost};
    }

    void initialize()
    {
        const SetKey none(_k, '0');
        std::u32string first(1, _center[0]);
        std::size_t first_cost = 0;
        for (const auto& s : _words)
            first_cost += s[0] != _center[0];
        offer(0, none, first, first_cost);

        std::map<std::u32string, bool> pairs;
        for (const auto& s : _words)
            if (s[0] != s[1])
                pairs.emplace(std::u32string{s[1], s[0]}, true);
        for (const auto& [ba, unused] : pairs) {
            const std::u32string head(1, ba[0]);
            std::size_t head_cost = 0;
            for (const auto& s : _words)
                head_cost += s[0] != ba[0];
            auto [key, delta] = step(head, none, ba[1]);
            offer(1, key, ba, head_cost + delta);
        }
        auto [key, delta] = step(first, none, _center[1]);
        if (key == none)
            offer(1, none, first + _center[1], first_cost + delta);
    }

    void extend(std::size_t r, const SetKey& key, const State& st)
    {
        const SetKey none(_k, '0');
        if (r > 0) {
            std::map<Symbol, bool> column;
            for (const auto& s : _words)
                column.emplace(s[r], true);
            for (const auto& [c, unused] : column) {
                auto [next, delta] = step(st.prefix, key, c);
                if (next != none)
                    offer(r + 1, next, st.prefix + c, st.cost + delta);
            }
            auto [next, delta] = step(st.prefix, key, _center[r + 1]);
            if (next == none)
                offer(r + 1, next, st.prefix + _center[r + 1], st.cost + delta);
        }
        if (r + 2 >= _n)
            return;
        std::map<std::u32string, bool> patterns;
        for (const auto& s : _words)
            if (s[r + 1] != s[r + 2])
                patterns.emplace(std::u32string{s[r + 2], s[r + 1]}, true);
        for (const auto& [ab, unused] : patterns) {
            auto [mid, d1] = step(st.prefix, key, ab[0]);
            if (mid != none)
                continue;
            const std::u32string half = st.prefix + ab[0];
            auto [last, d2] = step(half, mid, ab[1]);
            if (last != none)
                offer(r + 2, last, half + ab[1], st.cost + d1 + d2);
        }
    }

    void run(SearchStats& stats)
    {
        initialize();
        for (std::size_t r = 0; r + 1 < _n; ++r) {
            check_bound(r);
            for (const auto& [key, st] : _rows[r]) {
                ++stats.nodes_expanded;
                extend(r, key, st);
            }
        }
        check_bound(_n - 1);
        for (const auto& row : _rows)
            stats.dp_states += row.size();
    }

    const State* best() const
    {
        const State* out = nullptr;
        for (const auto& [key, st] : _rows.back())
            if (out == nullptr || std::tie(st.cost, st.prefix) < std::tie(out->cost, out->prefix))
                out = &st;
        return out;
    }

    ShSumTable table() const
    {
        ShSumTable t;
        for (const auto& row : _rows) {
            auto& out = t.rows.emplace_back();
            for (const auto& [key, st] : row)
                out.push_back(ShSumEntry{members(key), Word(st.prefix), st.cost});
        }
        return t;
    }

private:
    /// At most k*r non-empty sets are reachable on row r.
    void check_bound(std::size_t r) const
    {
        const SetKey none(_k, '0');
        const std::size_t nonempty = _rows[r].size() - _rows[r].count(none);
        if (nonempty > _k * r)
            throw CertificationFailure("sh sum: row " + std::to_string(r)
                                       + " holds more reachable sets than k*i");
    }

    std::size_t _n;
    std::size_t _k;
    std::u32string _center;
    std::vector<std::u32string> _words;
    std::vector<Row> _rows;
};

} // namespace

std::vector<std::size_t> swap_set(const Instance& inst, const Word& t, std::size_t i)
{
    if (i >= inst.length() || i >= t.size())
        throw OutOfRange("swap_set: position " + std::to_string(i) + " outside the prefix");
    std::vector<std::size_t> out;
    if (i == 0)
        return out;
    for (std::size_t j = 0; j < inst.size(); ++j) {
        const Word& s = inst[j];
        bool swapped = false;
        for (std::size_t p = 0; p < i; ++p) {
            swapped = !swapped && s[p] != s[p + 1] && t[p] == s[p + 1] && t[p + 1] == s[p];
        }
        if (swapped)
            out.push_back(j);
    }
    return out;
}

ConsensusAnswer sum_consensus_sh(const Instance& inst, std::optional<std::size_t> D,
                                 ShSumTable* table)
{
    Stopwatch watch;
    SearchStats stats;
    Word solution;
    std::optional<std::size_t> table_cost;
    if (inst.size() == 1) {
        solution = inst[0];
    } else if (inst.length() == 1) {
        solution = column_majority(inst);
    } else {
        ShSumDP dp(inst, column_majority(inst));
        dp.run(stats);
        if (table != nullptr)
            *table = dp.table();
        const State* best = dp.best();
        if (best == nullptr)
            throw CertificationFailure("sh sum: the last row is empty");
        solution = Word(best->prefix);
        table_cost = best->cost;
    }
    stats.elapsed = watch.elapsed();
    auto answer = make_feasible_answer(inst, std::move(solution), Metric::swap_hamming, stats);
    if (table_cost && answer.sum_distance != *table_cost)
        throw CertificationFailure("sh sum: table cost disagrees with the witness");
    if (D && answer.sum_distance > *D)
        return make_infeasible_answer("minimum sum " + std::to_string(answer.sum_distance)
                                          + " exceeds D = " + std::to_string(*D),
                                      stats);
    return answer;
}

} // namespace swapsensus
