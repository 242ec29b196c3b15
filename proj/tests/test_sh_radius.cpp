#include <gtest/gtest.h>

#include <random>

#include "swapsensus/oracle.hpp"
#include "swapsensus/sh_metric.hpp"
#include "swapsensus/sh_radius.hpp"
#include "test_support.hpp"

using namespace swapsensus;
using namespace swapsensus::testing;

TEST(RadiusConsensusSh, TableTwoInstance)
{
    const Instance in = inst({"baba", "cabc", "abca"});
    EXPECT_EQ(sh_distance(w("baba"), w("cabc")).cost, 2u);
    EXPECT_EQ(sh_distance(w("baba"), w("abca")).cost, 2u);
    const auto a = radius_consensus_sh(in, 2);
    ASSERT_TRUE(a.feasible());
    EXPECT_LE(a.max_distance, 2u);
    EXPECT_EQ(*a.solution, w("baba"));
    EXPECT_EQ(a.distances, (std::vector<std::size_t>{0, 2, 2}));
}

TEST(RadiusConsensusSh, SmallCases)
{
    EXPECT_EQ(*radius_consensus_sh(inst({"abc", "abc", "abc"}), 0).solution, w("abc"));

    const auto a = radius_consensus_sh(inst({"aa", "bb"}), 1);
    ASSERT_TRUE(a.feasible());
    EXPECT_TRUE(*a.solution == w("ab") || *a.solution == w("ba"));
    EXPECT_EQ(a.max_distance, 1u);

    EXPECT_FALSE(radius_consensus_sh(inst({"aa", "bb"}), 0).feasible());
    EXPECT_TRUE(radius_consensus_sh(inst({"abab", "baba"}), 1).feasible());
}

TEST(RadiusConsensusSh, AllRootsMode)
{
    const auto a = radius_consensus_sh(inst({"aab", "bba", "abb"}), 1, ShRadiusOptions{true});
    const auto b = radius_consensus_sh(inst({"aab", "bba", "abb"}), 1);
    EXPECT_EQ(a.feasible(), b.feasible());
}

TEST(ShRadiusProperties, AgreesWithEnumeration)
{
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 800; ++iter) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t k = 1 + rng() % 4;
        const Instance in = random_instance(rng, n, k, 2 + rng() % 2);
        const auto ref = ref_optima(in, RefMetric::sh, 3);
        for (std::size_t d = 0; d <= 3; ++d) {
            const auto a = radius_consensus_sh(in, d);
            ASSERT_EQ(a.feasible(), ref.min_radius <= d) << format_instance(in) << "d=" << d;
            EXPECT_LE(a.stats.max_depth, 2 * d);
        }
    }
}

TEST(ShRadiusProperties, DollarPadEquivalence)
{
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 300; ++iter) {
        const Instance in = random_instance(rng, 1 + rng() % 4, 1 + rng() % 3, 2 + rng() % 2);
        const auto ham = ref_optima(in, RefMetric::hamming, 3);
        const Instance padded = dollar_pad(in);
        for (std::size_t d = 0; d <= 3; ++d)
            EXPECT_EQ(radius_consensus_sh(padded, d).feasible(), ham.min_radius <= d);
    }
}
