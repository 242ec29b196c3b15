#include <gtest/gtest.h>

#include <random>

#include "swapsensus/swap_algebra.hpp"
#include "test_support.hpp"

using namespace swapsensus;
using namespace swapsensus::testing;

namespace {

std::string bits_of(const SwapMatch& m)
{
    return std::get<SwapStr>(m).bits();
}

} // namespace

TEST(SwapString, Examples)
{
    EXPECT_EQ(bits_of(swap_string(w("abab"), w("baba"))), "101");
    EXPECT_EQ(bits_of(swap_string(w("abc"), w("abc"))), "00");
    EXPECT_TRUE(std::holds_alternative<NotMatching>(swap_string(w("abc"), w("bca"))));
    EXPECT_EQ(bits_of(swap_string(w("ababc"), w("babac"))), "1010");
}

TEST(SwapString, BlockedTripleStrings)
{
    // s1 = ababc, s2 = babac, s3 = abbca, t = abbac
    EXPECT_EQ(bits_of(swap_string(w("ababc"), w("babac"))), "1010");
    EXPECT_EQ(bits_of(swap_string(w("babac"), w("abbca"))), "1001");
    EXPECT_EQ(bits_of(swap_string(w("abbac"), w("ababc"))), "0010");
    EXPECT_EQ(bits_of(swap_string(w("abbac"), w("abbca"))), "0001");
}

TEST(SwapString, ReportsFailingPosition)
{
    const auto m = swap_string(w("abc"), w("bca"));
    EXPECT_EQ(std::get<NotMatching>(m).position, 0u);
    EXPECT_THROW(swap_string(w("ab"), w("abc")), LengthMismatch);
}

TEST(SwapStr, ParseAndValidate)
{
    EXPECT_EQ(SwapStr::parse("101").popcount(), 2u);
    EXPECT_EQ(SwapStr::parse("101").ones(), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(SwapStr::parse("110"), std::invalid_argument);
    EXPECT_THROW(SwapStr::parse("1a0"), std::invalid_argument);
    EXPECT_EQ(SwapStr::parse("").home_length(), 1u);
    EXPECT_EQ(SwapStr(4).bits(), "000");
    EXPECT_EQ(SwapStr::parse("0101").to_word(), w("0101"));
}

TEST(ApplySwaps, Examples)
{
    EXPECT_EQ(apply_swaps(w("abab"), SwapStr::parse("101")), w("baba"));
    EXPECT_EQ(apply_swaps(w("abbac"), SwapStr::parse("0010")), w("ababc"));
    EXPECT_EQ(apply_swaps(w("abcde"), SwapStr(5)), w("abcde"));
    EXPECT_THROW(apply_swaps(w("abc"), SwapStr::parse("1")), LengthMismatch);
}

TEST(SwapDistance, Examples)
{
    EXPECT_EQ(swap_distance(w("abab"), w("baba")), 2u);
    EXPECT_EQ(swap_distance(w("abcd"), w("badc")), 2u);
    EXPECT_FALSE(swap_distance(w("abc"), w("bca")));
}

TEST(XorCompose, Examples)
{
    EXPECT_EQ(xor_compose("1010", "1001"), "0011");
    EXPECT_EQ(xor_compose("0101", "0000"), "0101");
    EXPECT_EQ(xor_compose("101", "101"), "000");
    EXPECT_THROW(xor_compose("10", "101"), LengthMismatch);
    EXPECT_EQ(popcount("10101"), 3u);
}

TEST(ThreeWayMatch, BlockedTriple)
{
    const auto r = three_way_match(w("ababc"), w("babac"), w("abbca"));
    const auto& b = std::get<Blocked>(r);
    EXPECT_EQ(b.middle + 1, 4u);
    EXPECT_EQ(b.forced_window, w("bac"));
}

TEST(ThreeWayMatch, MatchingCases)
{
    const auto r = three_way_match(w("bacd"), w("abcd"), w("abdc"));
    EXPECT_EQ(std::get<Matching>(r).h.bits(), "101");
    EXPECT_EQ(apply_swaps(w("bacd"), SwapStr::parse("101")), w("abdc"));

    const auto same = three_way_match(w("abab"), w("baba"), w("baba"));
    EXPECT_EQ(std::get<Matching>(same).h.bits(), "101");
    EXPECT_THROW(three_way_match(w("abc"), w("bca"), w("abc")), PrerequisiteNotMatching);
}

TEST(SwapAlgebraProperties, RandomRoundTripsAgainstEnumeration)
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::size_t n = 1 + rng() % 9;
        const Instance in = random_instance(rng, n, 2, 1 + rng() % 3);
        const auto& s = in[0];
        const auto& t = in[1];
        const auto got = swap_distance(s, t);
        const std::size_t want = naive_swap_distance(s.symbols(), t.symbols());
        ASSERT_EQ(got.value_or(inf), want) << s.to_utf8() << " " << t.to_utf8();
        if (got) {
            EXPECT_EQ(std::get<SwapStr>(swap_string(s, t)), std::get<SwapStr>(swap_string(t, s)));
            EXPECT_EQ(multiset_signature(s), multiset_signature(t));
        }
    }
}

TEST(SwapAlgebraProperties, ApplyIsAnInvolution)
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 2 + rng() % 8;
        const Word s = random_instance(rng, n, 1, 3)[0];
        const auto sets = all_swap_sets(n);
        std::string bits(n - 1, '0');
        for (std::size_t p : sets[rng() % sets.size()])
            bits[p] = '1';
        const SwapStr h = SwapStr::parse(bits);
        EXPECT_EQ(apply_swaps(apply_swaps(s, h), h), s);
    }
}

TEST(SwapAlgebraProperties, PrefixCountsAgreeOutsideSwaps)
{
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 1000; ++iter) {
        const Instance in = random_swap_pair(rng, 2 + rng() % 8, 3);
        const auto m = swap_string(in[0], in[1]);
        const auto& h = std::get<SwapStr>(m);
        for (std::size_t p = 0; p + 1 < in.length(); ++p)
            if (!h.at(p))
                EXPECT_EQ(multiset_signature(in[0].slice(0, p + 1)),
                          multiset_signature(in[1].slice(0, p + 1)));
    }
}

TEST(SwapAlgebraProperties, BlockedVerdictsAreConfirmedExhaustively)
{
    std::mt19937_64 rng(17);
    std::size_t blocked = 0;
    for (int iter = 0; iter < 3000; ++iter) {
        const std::size_t n = 2 + rng() % 7;
        const Instance in = random_swap_triple(rng, n, 3);
        const auto r = three_way_match(in[0], in[1], in[2]);
        const std::size_t exhaustive = naive_swap_distance(in[0].symbols(), in[2].symbols());
        if (const auto* m = std::get_if<Matching>(&r)) {
            EXPECT_EQ(m->h.popcount(), exhaustive);
            EXPECT_EQ(apply_swaps(in[0], m->h), in[2]);
        } else {
            ++blocked;
            EXPECT_EQ(exhaustive, inf);
        }
    }
    EXPECT_GT(blocked, 0u);
}
