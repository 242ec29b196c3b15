#include <gtest/gtest.h>

#include <random>

#include "swapsensus/swap_pipeline.hpp"
#include "test_support.hpp"

using namespace swapsensus;
using namespace swapsensus::testing;

namespace {

const Instance& three_words()
{
    static const Instance in =
        inst({"abgabcahidabdefeda", "bagcaabihdabefddea", "bagcabaihdbaefdeda"});
    return in;
}

} // namespace

TEST(RadiusConsensusSwap, ThreeWords)
{
    SwapPipelineTrace trace;
    const auto a = radius_consensus_swap(three_words(), 4, &trace);
    ASSERT_TRUE(a.feasible());
    EXPECT_EQ(*a.solution, w("bagacbaihdabedfeda"));
    EXPECT_EQ(a.distances, (std::vector<std::size_t>{4, 4, 3}));

    ASSERT_EQ(trace.encoded.size(), 3u);
    EXPECT_EQ(trace.encoded[0].bits(), "00000000000000000");
    EXPECT_EQ(trace.encoded[1].bits(), "10000001000000010");
    EXPECT_EQ(trace.encoded[2].bits(), "10000001001000000");
    EXPECT_EQ(trace.h_star->bits(), "10000001000000000");
    EXPECT_EQ(*trace.decoded, w("bagacbaihdabedfeda"));
    EXPECT_EQ(trace.disentanglement->strings_prime[1], w("bagacbaihdabedfdea"));
}

TEST(RadiusConsensusSwap, PrintedWitnessCertifies)
{
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(swap_distance(three_words()[i], w("bagacbaihdabedfeda")),
                  (std::vector<std::size_t>{4, 4, 3})[i]);
}

TEST(RadiusConsensusSwap, SmallCases)
{
    EXPECT_EQ(*radius_consensus_swap(inst({"abc", "abc"}), 0).solution, w("abc"));
    EXPECT_FALSE(radius_consensus_swap(inst({"abab", "baba"}), 0).feasible());
    EXPECT_FALSE(radius_consensus_swap(three_words(), 3).feasible());
    EXPECT_EQ(*radius_consensus_swap(inst({"a", "a"}), 0).solution, w("a"));
}

TEST(SumConsensusSwap, Examples)
{
    SwapPipelineTrace trace;
    const auto a = sum_consensus_swap(inst({"ab", "ba"}), std::nullopt, &trace);
    EXPECT_EQ(*a.solution, w("ab"));
    EXPECT_EQ(a.sum_distance, 1u);
    EXPECT_EQ(trace.h_star->bits(), "0");

    EXPECT_EQ(sum_consensus_swap(inst({"abc", "abc", "abc"})).sum_distance, 0u);

    const auto bad = sum_consensus_swap(inst({"ababc", "abbca", "abacb"}));
    EXPECT_FALSE(bad.feasible());
    EXPECT_EQ(bad.reason.rfind("no common matching word", 0), 0u);

    EXPECT_FALSE(sum_consensus_swap(inst({"ab", "ba"}), 0).feasible());
}

TEST(RsConsensusSwap, Examples)
{
    const auto a = rs_consensus_swap(three_words(), 4, 11);
    ASSERT_TRUE(a.feasible());
    EXPECT_EQ(a.sum_distance, 11u);
    EXPECT_FALSE(rs_consensus_swap(three_words(), 4, 10).feasible());
    EXPECT_TRUE(rs_consensus_swap(inst({"ab", "ab"}), 0, 0).feasible());
    EXPECT_FALSE(rs_consensus_swap(inst({"abab", "baba"}), 2, 1).feasible());
    EXPECT_TRUE(rs_consensus_swap(inst({"abab", "baba"}), 2, 2).feasible());
}

TEST(SwapPipelineProperties, AgreesWithEnumeration)
{
    std::mt19937_64 rng(37);
    std::size_t feasible = 0;
    for (int iter = 0; iter < 1500; ++iter) {
        const std::size_t n = 1 + rng() % 7;
        const std::size_t k = 1 + rng() % 4;
        const Instance in = random_swap_instance(rng, n, k, 2 + rng() % 2);
        const std::size_t max_d = 4;
        const auto ref = ref_optima(in, RefMetric::swap, max_d);

        SwapPipelineTrace trace;
        const auto sum = sum_consensus_swap(in, std::nullopt, &trace);
        ASSERT_EQ(sum.feasible(), ref.min_sum != inf) << format_instance(in);
        if (!sum.feasible())
            continue;
        ++feasible;
        EXPECT_EQ(sum.sum_distance, ref.min_sum) << format_instance(in);
        EXPECT_EQ(trace.encoded[0].popcount(), 0u);

        for (std::size_t d = 0; d <= max_d; ++d) {
            const auto r = radius_consensus_swap(in, d);
            ASSERT_EQ(r.feasible(), ref.min_radius <= d) << format_instance(in) << " d=" << d;
            const std::size_t D = rng() % 12;
            const auto rs = rs_consensus_swap(in, d, D);
            const std::size_t best = ref.min_sum_within_radius[d];
            ASSERT_EQ(rs.feasible(), best != inf && best <= D) << format_instance(in);
            if (rs.feasible())
                EXPECT_EQ(rs.sum_distance, best);
        }
    }
    EXPECT_GT(feasible, 500u);
}
