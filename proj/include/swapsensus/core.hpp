// core.hpp -- words, instances and consensus answers shared by every solver

#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapsensus/errors.hpp"

namespace swapsensus {

/// One letter. Symbols are ordered by code point; that order drives every
/// lexicographic tie-break in the library.
using Symbol = char32_t;

/// Decodes UTF-8 into code points. Throws InstanceError(invalid_symbol) on
/// malformed input.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view symbols);

/// A fixed-length sequence of symbols.
///
/// Positions are 0-based in code. Diagnostics printed by the CLI convert to
/// 1-based positions.
class Word
{
public:
    Word() = default;
    explicit Word(std::u32string symbols) : _symbols(std::move(symbols)) {}

    static Word from_utf8(std::string_view text) { return Word(decode_utf8(text)); }

    std::string to_utf8() const { return encode_utf8(_symbols); }

    std::size_t size() const noexcept { return _symbols.size(); }
    bool empty() const noexcept { return _symbols.empty(); }

    Symbol operator[](std::size_t p) const { return _symbols[p]; }

    /// Overwrites one position; the length never changes.
    void set(std::size_t p, Symbol s) { _symbols.at(p) = s; }

    /// Exchanges positions p and p+1.
    void swap_adjacent(std::size_t p) { std::swap(_symbols.at(p), _symbols.at(p + 1)); }

    const std::u32string& symbols() const noexcept { return _symbols; }

    Word slice(std::size_t pos, std::size_t len) const { return Word(_symbols.substr(pos, len)); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        return a._symbols.compare(b._symbols) <=> 0;
    }

private:
    std::u32string _symbols;
};

/// Letter counts of a word.
std::map<Symbol, std::size_t> multiset_signature(const Word& w);

/// k >= 1 words of a common length n >= 1, plus the sorted alphabet of the
/// symbols that actually occur.
class Instance
{
public:
    /// Throws InstanceError on an empty list, unequal lengths or empty words.
    explicit Instance(std::vector<Word> words);

    std::size_t size() const noexcept { return _words.size(); }
    std::size_t length() const noexcept { return _words.front().size(); }

    const Word& operator[](std::size_t i) const { return _words[i]; }
    const std::vector<Word>& words() const noexcept { return _words; }
    const std::vector<Symbol>& alphabet() const noexcept { return _alphabet; }

    /// Distinct symbols of column p, ascending.
    std::vector<Symbol> column(std::size_t p) const;

    bool contains_symbol(Symbol s) const;

private:
    std::vector<Word> _words;
    std::vector<Symbol> _alphabet;
};

/// Parses the instance file format: one word per line, `#` starts a comment
/// line, blank lines are skipped, trailing newline optional.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance (without comments).
std::string format_instance(const Instance& inst);

/// An instance whose strings already consumed part of their radius.
struct BudgetedInstance
{
    BudgetedInstance(Instance inst, std::vector<std::size_t> budgets);

    Instance instance;
    std::vector<std::size_t> budgets;

    std::size_t total_budget() const;
    std::size_t max_budget() const;
};

/// Reads whitespace-separated non-negative integers (`#` comments allowed).
std::vector<std::size_t> parse_budgets(std::string_view text);

enum class Metric { hamming, swap, swap_hamming };
enum class Objective { radius, sum, radius_sum };

std::string_view to_string(Metric m);
std::string_view to_string(Objective o);
std::optional<Metric> parse_metric(std::string_view s);
std::optional<Objective> parse_objective(std::string_view s);

struct SearchStats
{
    std::uint64_t nodes_expanded = 0;
    std::uint64_t dp_states = 0;
    std::uint64_t oracle_enumerated = 0;
    std::size_t max_depth = 0;
    std::chrono::nanoseconds elapsed{0};
};

enum class Status { feasible, infeasible };

/// Result of any consensus solver.
///
/// For feasible answers `distances`, `max_distance` and `sum_distance` are
/// always recomputed from `solution` (see make_feasible_answer); they are
/// never copied out of a search.
struct ConsensusAnswer
{
    Status status = Status::infeasible;
    std::optional<Word> solution;
    std::vector<std::size_t> distances;
    std::size_t max_distance = 0;
    std::size_t sum_distance = 0;
    SearchStats stats;
    std::string reason;

    bool feasible() const noexcept { return status == Status::feasible; }
};

} // namespace swapsensus
