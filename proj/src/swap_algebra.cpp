#include "swapsensus/swap_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace swapsensus {

SwapStr::SwapStr(std::size_t home_length)
{
    if (home_length == 0)
        throw std::invalid_argument("SwapStr: home length must be at least 1");
    _bits.assign(home_length - 1, '0');
}

SwapStr SwapStr::parse(std::string_view bits)
{
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p] != '0' && bits[p] != '1')
            throw std::invalid_argument("SwapStr: expected only 0 and 1");
        if (p > 0 && bits[p] == '1' && bits[p - 1] == '1')
            throw std::invalid_argument("SwapStr: adjacent ones at " + std::to_string(p));
    }
    return SwapStr(std::string(bits));
}

std::size_t SwapStr::popcount() const
{
    return swapsensus::popcount(_bits);
}

std::vector<std::size_t> SwapStr::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < _bits.size(); ++p)
        if (_bits[p] == '1')
            out.push_back(p);
    return out;
}

Word SwapStr::to_word() const
{
    return Word(std::u32string(_bits.begin(), _bits.end()));
}

SwapMatch swap_string(const Word& s, const Word& t)
{
    if (s.size() != t.size())
        throw LengthMismatch("swap_string: lengths " + std::to_string(s.size()) + " and "
                             + std::to_string(t.size()));
    const std::size_t n = s.size();
    std::string bits(n == 0 ? 0 : n - 1, '0');
    std::size_t p = 0;
    while (p < n) {
        if (s[p] == t[p]) {
            ++p;
            continue;
        }
        // s[p] != t[p] == s[p+1] also guarantees the swapped symbols differ.
        if (p + 1 < n && s[p] == t[p + 1] && s[p + 1] == t[p]) {
            bits[p] = '1';
            p += 2;
            continue;
        }
        return NotMatching{p};
    }
    return SwapStr::parse(bits);
}

Word apply_swaps(const Word& s, const SwapStr& h)
{
    if (h.home_length() != s.size())
        throw LengthMismatch("apply_swaps: swap string is for length "
                             + std::to_string(h.home_length()) + ", word has length "
                             + std::to_string(s.size()));
    Word out = s;
    for (std::size_t p : h.ones())
        out.swap_adjacent(p);
    return out;
}

std::optional<std::size_t> swap_distance(const Word& s, const Word& t)
{
    auto m = swap_string(s, t);
    if (const auto* h = std::get_if<SwapStr>(&m))
        return h->popcount();
    return std::nullopt;
}

std::string xor_compose(std::string_view h1, std::string_view h2)
{
    if (h1.size() != h2.size())
        throw LengthMismatch("xor_compose: lengths " + std::to_string(h1.size()) + " and "
                             + std::to_string(h2.size()));
    std::string out(h1.size(), '0');
    for (std::size_t p = 0; p < h1.size(); ++p)
        out[p] = (h1[p] == '1') != (h2[p] == '1') ? '1' : '0';
    return out;
}

std::size_t popcount(std::string_view bits)
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '1'));
}

ThreeWayOutcome three_way_match(const Word& s1, const Word& s2, const Word& s3)
{
    auto m12 = swap_string(s1, s2);
    auto m23 = swap_string(s2, s3);
    const auto* h12 = std::get_if<SwapStr>(&m12);
    const auto* h23 = std::get_if<SwapStr>(&m23);
    if (h12 == nullptr || h23 == nullptr)
        throw PrerequisiteNotMatching(h12 == nullptr ? "s1 and s2 do not match"
                                                     : "s2 and s3 do not match");
    const std::string h = xor_compose(h12->bits(), h23->bits());
    const auto blocked = h.find("11");
    if (blocked == std::string::npos)
        return Matching{SwapStr::parse(h)};
    return Blocked{blocked + 1, s2.slice(blocked, 3)};
}

} // namespace swapsensus
