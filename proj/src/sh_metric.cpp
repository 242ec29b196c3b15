#include "swapsensus/sh_metric.hpp"

#include <string>

namespace swapsensus {

namespace {

inline bool reversed_pair(std::u32string_view s, std::u32string_view t, std::size_t i)
{
    return s[i] != s[i + 1] && s[i] == t[i + 1] && s[i + 1] == t[i];
}

} // namespace

SHResult sh_distance(const Word& s, const Word& t)
{
    if (s.size() != t.size())
        throw LengthMismatch("sh_distance: lengths " + std::to_string(s.size()) + " and "
                             + std::to_string(t.size()));
    const std::u32string_view a = s.symbols();
    const std::u32string_view b = t.symbols();
    const std::size_t n = a.size();
    SHWitness w;
    std::size_t i = 0;
    while (i < n) {
        if (i + 1 < n && reversed_pair(a, b, i)) {
            w.swaps.push_back(i);
            i += 2;
            continue;
        }
        if (a[i] != b[i])
            w.substitutions.push_back(i);
        ++i;
    }
    return SHResult{w.cost(), std::move(w)};
}

std::size_t sh_cost(std::u32string_view s, std::u32string_view t)
{
    const std::size_t n = s.size();
    std::size_t cost = 0;
    std::size_t i = 0;
    while (i < n) {
        if (i + 1 < n && reversed_pair(s, t, i)) {
            ++cost;
            i += 2;
            continue;
        }
        cost += s[i] != t[i];
        ++i;
    }
    return cost;
}

} // namespace swapsensus
