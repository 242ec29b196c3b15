#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "swapsensus/oracle.hpp"
#include "swapsensus/sh_metric.hpp"
#include "test_support.hpp"

using namespace swapsensus;
using namespace swapsensus::testing;

namespace {

OracleQuery query(const Instance& in, Metric m, Objective o, std::optional<std::size_t> d = {},
                  std::optional<std::size_t> D = {})
{
    return OracleQuery{in, m, o, d, D, std::nullopt, std::nullopt};
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(BruteForce, Examples)
{
    const auto a = brute_force(query(inst({"baba", "cabc", "abca"}), Metric::swap_hamming,
                                     Objective::sum));
    EXPECT_EQ(a.sum_distance, 4u);
    EXPECT_EQ(*a.solution, w("baba"));

    for (Metric m : {Metric::hamming, Metric::swap, Metric::swap_hamming}) {
        const auto one = brute_force(query(inst({"cab"}), m, Objective::sum));
        EXPECT_EQ(one.sum_distance, 0u);
        EXPECT_EQ(*one.solution, w("cab"));
    }

    const auto r = brute_force(query(inst({"aa", "bb"}), Metric::hamming, Objective::radius, 1));
    ASSERT_TRUE(r.feasible());
    EXPECT_EQ(*r.solution, w("ab"));
    EXPECT_EQ(r.stats.oracle_enumerated, 4u);

    EXPECT_FALSE(
        brute_force(query(inst({"aa", "bb"}), Metric::hamming, Objective::radius, 0)).feasible());
    EXPECT_FALSE(brute_force(query(inst({"ababc", "abbca", "abacb"}), Metric::swap, Objective::sum))
                     .feasible());
    // bac matches both
    EXPECT_EQ(*brute_force(query(inst({"abc", "bca"}), Metric::swap, Objective::sum)).solution,
              w("bac"));
}

TEST(BruteForce, RadiusSumAndBudgets)
{
    const auto rs = brute_force(
        query(inst({"ab", "ba"}), Metric::hamming, Objective::radius_sum, 1, 2));
    EXPECT_EQ(*rs.solution, w("aa"));
    EXPECT_FALSE(brute_force(query(inst({"ab", "ba"}), Metric::hamming, Objective::radius_sum, 1, 1))
                     .feasible());

    auto q = query(inst({"ab", "ab"}), Metric::hamming, Objective::radius, 1);
    q.budgets = std::vector<std::size_t>{1, 0};
    EXPECT_EQ(brute_force(q).distances, (std::vector<std::size_t>{0, 0}));
    q.budgets = std::vector<std::size_t>{2, 0};
    EXPECT_FALSE(brute_force(q).feasible());
}

TEST(BruteForce, Cap)
{
    auto q = query(inst({"abcdefgh"}), Metric::hamming, Objective::sum);
    q.cap = 1000;
    EXPECT_THROW(brute_force(q), CapExceeded);
    q.cap = 8u * 8 * 8 * 8 * 8 * 8 * 8 * 8;
    EXPECT_NO_THROW(brute_force(q));

    setenv("SWAPSENSUS_ORACLE_CAP", "10", 1);
    EXPECT_THROW(brute_force(query(inst({"abcd"}), Metric::hamming, Objective::sum)), CapExceeded);
    unsetenv("SWAPSENSUS_ORACLE_CAP");
    EXPECT_NO_THROW(brute_force(query(inst({"abcd"}), Metric::hamming, Objective::sum)));
}

TEST(BruteForce, ParallelMatchesSerialAndReference)
{
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 300; ++iter) {
        const Instance in = random_swap_instance(rng, 1 + rng() % 6, 1 + rng() % 4, 2 + rng() % 2);
        const Metric m = std::array{Metric::hamming, Metric::swap, Metric::swap_hamming}[rng() % 3];
        const Objective o = std::array{Objective::radius, Objective::sum, Objective::radius_sum}[rng() % 3];
        const std::size_t d = rng() % 4;
        const auto q = query(in, m, o, d, std::nullopt);
        const auto par = brute_force(q);
        const auto ser = brute_force_serial(q);
        ASSERT_EQ(par.feasible(), ser.feasible());
        EXPECT_EQ(par.solution, ser.solution);

        const RefMetric rm = m == Metric::hamming ? RefMetric::hamming
                             : m == Metric::swap  ? RefMetric::swap
                                                  : RefMetric::sh;
        const auto ref = ref_optima(in, rm, d);
        if (o == Objective::sum) {
            ASSERT_EQ(par.feasible(), ref.min_sum != inf);
            if (par.feasible())
                EXPECT_EQ(par.sum_distance, ref.min_sum);
        } else if (o == Objective::radius) {
            ASSERT_EQ(par.feasible(), ref.min_radius <= d);
            if (par.feasible())
                EXPECT_EQ(par.max_distance, ref.min_radius);
        } else {
            ASSERT_EQ(par.feasible(), ref.min_sum_within_radius[d] != inf);
            if (par.feasible())
                EXPECT_EQ(par.sum_distance, ref.min_sum_within_radius[d]);
        }
    }
}

TEST(DollarPad, Examples)
{
    EXPECT_EQ(dollar_pad(inst({"ab", "ba"})).words(), (std::vector<Word>{w("a$b"), w("b$a")}));
    EXPECT_EQ(dollar_pad(inst({"a"})).words(), (std::vector<Word>{w("a")}));
    EXPECT_THROW(dollar_pad(inst({"a$"})), ReservedSymbolPresent);
}

TEST(GenPlanted, Examples)
{
    const auto same = gen_planted(1, 6, 4, 3, 0);
    for (const auto& word : same.instance.words())
        EXPECT_EQ(word, same.center);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = gen_planted(seed, 10, 4, 3, 3);
        for (const auto& word : p.instance.words())
            EXPECT_LE(sh_distance(word, p.center).cost, 3u);
        EXPECT_EQ(format_instance(gen_planted(seed, 10, 4, 3, 3).instance),
                  format_instance(p.instance));
    }
    EXPECT_THROW(gen_planted(1, 4, 2, 1, 1), std::invalid_argument);
}

TEST(GenPlanted, GoldenFiles)
{
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto p = gen_planted(seed, 12, 4, 4, 3);
        const std::string base = std::string(SWAPSENSUS_GOLDEN_DIR) + "/planted_seed"
                                 + std::to_string(seed);
        EXPECT_EQ(format_instance(p.instance), read_file(base + ".txt")) << base;
        const auto meta = nlohmann::json::parse(read_file(base + ".txt.json"));
        EXPECT_EQ(meta["center"], p.center.to_utf8()) << base;
        EXPECT_EQ(meta["seed"], seed);
    }
}
