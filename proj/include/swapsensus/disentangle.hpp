// disentangle.hpp -- apply exactly the necessary swaps so that all words
// become pairwise matching

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "swapsensus/core.hpp"

namespace swapsensus {

/// Closed range of 0-based positions on which every common match of the
/// instance is forced letter by letter.
struct TangledInterval
{
    std::size_t first;
    std::size_t last;

    friend bool operator==(const TangledInterval&, const TangledInterval&) = default;
};

struct Disentanglement
{
    std::vector<Word> strings_prime;      ///< the words after their necessary swaps
    std::vector<std::size_t> budgets;     ///< swaps applied to each word
    std::size_t total = 0;                ///< sum of budgets
    std::vector<TangledInterval> tangled_intervals;

    /// Letters forced inside tangled intervals, `?` elsewhere.
    std::string forced_pattern() const;
};

/// No word matches every input; `column` is the 0-based column where the
/// scan gave up (or the word count mismatch for multiset failures).
struct DisentangleFailure
{
    std::string reason;
    std::size_t column;
};

using DisentangleResult = std::variant<Disentanglement, DisentangleFailure>;

/// Left-to-right scan: dirty columns must pair up as {xy, yx}; the first
/// column that does not opens a tangled interval, whose forced letters are
/// propagated one position at a time until every word agrees with them.
/// The result is certified pairwise matching before it is returned.
DisentangleResult disentangle(const Instance& inst);

} // namespace swapsensus
