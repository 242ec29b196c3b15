// swap_algebra.hpp -- swap permutations encoded as binary strings

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

/// A set of pairwise-disjoint adjacent swaps on a word of length
/// home_length(), stored as a binary string of length home_length()-1 where
/// bit p marks the swap of positions (p, p+1).
///
/// Invariant: no two adjacent ones.
class SwapStr
{
public:
    /// The identity permutation. `home_length` may be 1 (empty bit string).
    explicit SwapStr(std::size_t home_length);

    /// Parses a `0`/`1` string. Throws std::invalid_argument on other
    /// characters or on two adjacent ones.
    static SwapStr parse(std::string_view bits);

    std::size_t home_length() const noexcept { return _bits.size() + 1; }
    const std::string& bits() const noexcept { return _bits; }

    bool at(std::size_t p) const { return _bits.at(p) == '1'; }
    std::size_t popcount() const;
    std::vector<std::size_t> ones() const;

    /// The bits as a word over the symbols `0` and `1`.
    Word to_word() const;

    friend bool operator==(const SwapStr&, const SwapStr&) = default;

private:
    explicit SwapStr(std::string bits) : _bits(std::move(bits)) {}

    std::string _bits;
};

/// Returned by swap_string when no swap permutation links the two words.
/// `position` is the 0-based position where the forced swap failed.
struct NotMatching
{
    std::size_t position;
};

using SwapMatch = std::variant<SwapStr, NotMatching>;

/// The unique valid swap string turning s into t, computed in one left to
/// right pass: the first mismatch at p forces a swap at (p, p+1).
/// Throws LengthMismatch.
SwapMatch swap_string(const Word& s, const Word& t);

/// Exchanges every marked pair. Total: a marked pair of equal symbols is
/// exchanged too (leaving the word unchanged there).
Word apply_swaps(const Word& s, const SwapStr& h);

/// Number of swaps between matching words, nullopt (infinity) otherwise.
std::optional<std::size_t> swap_distance(const Word& s, const Word& t);

/// Pointwise XOR of two `0`/`1` strings. The result may contain "11".
std::string xor_compose(std::string_view h1, std::string_view h2);

std::size_t popcount(std::string_view bits);

struct Matching
{
    SwapStr h;
};

/// Any word matching both s1 and s3 must carry `forced_window` at positions
/// middle-1 .. middle+1 (0-based).
struct Blocked
{
    std::size_t middle;
    Word forced_window;
};

using ThreeWayOutcome = std::variant<Matching, Blocked>;

/// Combines h(s1,s2) and h(s2,s3). Throws PrerequisiteNotMatching unless
/// both pairs match.
ThreeWayOutcome three_way_match(const Word& s1, const Word& s2, const Word& s3);

} // namespace swapsensus
