#include "swapsensus/disentangle.hpp"

#include <algorithm>
#include <optional>

#include "swapsensus/swap_algebra.hpp"

namespace swapsensus {

namespace {

using Rows = std::vector<std::u32string>;

bool column_clean(const Rows& rows, std::size_t p)
{
    return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r[p] == rows[0][p]; });
}

/// Columns (p, p+1) read exactly {xy, yx} for two distinct letters.
bool benign_pair(const Rows& rows, std::size_t p)
{
    const Symbol x = rows[0][p];
    const Symbol y = rows[0][p + 1];
    if (x == y)
        return false;
    bool seen_reverse = false;
    for (const auto& r : rows) {
        if (r[p] == x && r[p + 1] == y)
            continue;
        if (r[p] == y && r[p + 1] == x) {
            seen_reverse = true;
            continue;
        }
        return false;
    }
    return seen_reverse;
}

/// Resolves the tangled interval opening at `start`. On success returns the
/// last position of the interval.
class TangleResolver
{
public:
    TangleResolver(Rows& rows, std::vector<std::size_t>& budgets)
      : _rows(rows), _budgets(budgets), _forced(rows[0].size())
    {
    }

    std::variant<std::size_t, DisentangleFailure> resolve(std::size_t start)
    {
        const std::size_t n = _rows[0].size();
        std::vector<Symbol> col;
        for (const auto& r : _rows)
            col.push_back(r[start]);
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
        if (col.size() > 2)
            return fail("column holds more than two letters", start);
        if (start + 1 >= n)
            return fail("dirty last column", start);

        // Words whose next letter cannot come from this column (or repeats
        // the current one) must swap at start+1.
        std::vector<std::size_t> ahead;
        for (std::size_t j = 0; j < _rows.size(); ++j) {
            const Symbol next = _rows[j][start + 1];
            if (!std::binary_search(col.begin(), col.end(), next) || next == _rows[j][start])
                ahead.push_back(j);
        }
        if (ahead.empty())
            return fail("dirty column admits no common match", start);
        for (std::size_t j : ahead)
            if (auto f = forced_swap(j, start + 1))
                return *f;

        // Words that now disagree at start+1 must swap at start.
        for (std::size_t j = 0; j < _rows.size(); ++j)
            if (_rows[j][start + 1] != *_forced[start + 1])
                if (auto f = forced_swap(j, start))
                    return *f;
        if (!column_clean(_rows, start))
            return fail("words disagree after the forced swaps", start);

        // Propagate until every word agrees with the newest forced letter.
        std::size_t front = start + 2;
        for (;;) {
            std::vector<std::size_t> behind;
            for (std::size_t j = 0; j < _rows.size(); ++j)
                if (_rows[j][front] != *_forced[front])
                    behind.push_back(j);
            if (behind.empty())
                return front;
            for (std::size_t j : behind)
                if (auto f = forced_swap(j, front))
                    return *f;
            ++front;
        }
    }

private:
    static DisentangleFailure fail(const std::string& why, std::size_t column)
    {
        return DisentangleFailure{why + " at column " + std::to_string(column + 1), column};
    }

    /// Word j must swap (p, p+1); records the letters this forces on every
    /// common match, or the reason it is impossible.
    std::optional<DisentangleFailure> forced_swap(std::size_t j, std::size_t p)
    {
        auto& r = _rows[j];
        if (p + 1 >= r.size())
            return fail("forced swap runs past the end", p);
        if (r[p] == r[p + 1])
            return fail("forced swap of equal letters", p);
        if (_forced[p] && *_forced[p] != r[p + 1])
            return fail("forced swap contradicts a forced letter", p);
        if (_forced[p + 1] && *_forced[p + 1] != r[p])
            return fail("forced swap contradicts a forced letter", p + 1);
        _forced[p] = r[p + 1];
        _forced[p + 1] = r[p];
        std::swap(r[p], r[p + 1]);
        ++_budgets[j];
        return std::nullopt;
    }

    Rows& _rows;
    std::vector<std::size_t>& _budgets;
    std::vector<std::optional<Symbol>> _forced;
};

/// Every word matches the first one and no two swap strings touch adjacent
/// positions, which together make the family pairwise matching.
std::optional<std::string> certify_pairwise(const std::vector<Word>& words)
{
    const std::size_t n = words.front().size();
    std::string ones(n == 0 ? 0 : n - 1, '0');
    for (std::size_t i = 1; i < words.size(); ++i) {
        auto m = swap_string(words.front(), words[i]);
        const auto* h = std::get_if<SwapStr>(&m);
        if (h == nullptr)
            return "word " + std::to_string(i + 1) + " does not match word 1";
        for (std::size_t p : h->ones())
            ones[p] = '1';
    }
    if (ones.find("11") != std::string::npos)
        return std::string("two disentangled words use overlapping swaps");
    return std::nullopt;
}

} // namespace

std::string Disentanglement::forced_pattern() const
{
    std::u32string pattern(strings_prime.front().size(), U'?');
    for (const auto& iv : tangled_intervals)
        for (std::size_t p = iv.first; p <= iv.last; ++p)
            pattern[p] = strings_prime.front()[p];
    return encode_utf8(pattern);
}

DisentangleResult disentangle(const Instance& inst)
{
    const auto signature = multiset_signature(inst[0]);
    for (std::size_t i = 1; i < inst.size(); ++i)
        if (multiset_signature(inst[i]) != signature)
            return DisentangleFailure{"word " + std::to_string(i + 1)
                                          + " uses a different multiset of letters than word 1",
                                      i};

    Rows rows;
    for (const auto& w : inst.words())
        rows.push_back(w.symbols());
    const std::size_t n = inst.length();

    Disentanglement out;
    out.budgets.assign(inst.size(), 0);
    TangleResolver resolver(rows, out.budgets);

    std::size_t p = 0;
    while (p < n) {
        if (column_clean(rows, p)) {
            ++p;
            continue;
        }
        if (p + 1 < n && benign_pair(rows, p)) {
            p += 2;
            continue;
        }
        auto closed = resolver.resolve(p);
        if (auto* f = std::get_if<DisentangleFailure>(&closed))
            return *f;
        const std::size_t last = std::get<std::size_t>(closed);
        out.tangled_intervals.push_back(TangledInterval{p, last});
        p = last + 1;
    }

    for (auto& r : rows)
        out.strings_prime.emplace_back(std::move(r));
    if (auto why = certify_pairwise(out.strings_prime))
        return DisentangleFailure{*why, n};

    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto d = swap_distance(inst[i], out.strings_prime[i]);
        if (!d || *d != out.budgets[i])
            throw CertificationFailure("disentangle: swap count of word " + std::to_string(i + 1)
                                       + " disagrees with its budget");
        out.total += out.budgets[i];
    }
    return out;
}

} // namespace swapsensus
