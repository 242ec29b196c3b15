// cli.hpp -- the swapsensus command line

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "swapsensus/core.hpp"

namespace swapsensus::cli {

enum class Command { distance, consensus, disentangle, oracle, gen };
enum class Output { human, json };

/// Exit codes: 0 solved or feasible, 1 infeasible, 2 usage or input error.
inline constexpr int exit_feasible = 0;
inline constexpr int exit_infeasible = 1;
inline constexpr int exit_error = 2;

struct RunConfig
{
    Command command = Command::consensus;
    Metric metric = Metric::hamming;
    Objective objective = Objective::sum;
    std::optional<std::size_t> d;
    std::optional<std::size_t> D;
    std::optional<std::string> budgets_path;
    std::string input_path = "-"; ///< `-` reads standard input
    std::string word1;            ///< distance operands
    std::string word2;
    Output output = Output::human;
    bool trace = false;
    bool dump_table = false;
    bool all_roots = false;

    std::optional<std::uint64_t> seed;
    std::size_t n = 8;
    std::size_t k = 3;
    std::size_t sigma = 3;
    std::size_t ops = 2;
    std::optional<std::string> output_path;
};

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace swapsensus::cli
