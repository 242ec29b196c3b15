#include <gtest/gtest.h>

#include <random>

#include "swapsensus/report.hpp"
#include "swapsensus/sh_metric.hpp"
#include "swapsensus/swap_algebra.hpp"
#include "test_support.hpp"

using namespace swapsensus;
using namespace swapsensus::testing;

namespace {

/// Applies the witness to s and checks it yields t.
void expect_witness_valid(const Word& s, const Word& t, const SHWitness& wit)
{
    std::u32string x = s.symbols();
    for (std::size_t i = 0; i < wit.swaps.size(); ++i) {
        if (i > 0)
            EXPECT_GT(wit.swaps[i], wit.swaps[i - 1] + 1);
        EXPECT_NE(x[wit.swaps[i]], x[wit.swaps[i] + 1]);
        std::swap(x[wit.swaps[i]], x[wit.swaps[i] + 1]);
    }
    for (std::size_t p : wit.substitutions) {
        for (std::size_t q : wit.swaps)
            EXPECT_TRUE(p != q && p != q + 1);
        x[p] = t[p];
    }
    EXPECT_EQ(Word(x), t);
}

} // namespace

TEST(ShDistance, Examples)
{
    const auto r = sh_distance(w("abab"), w("baba"));
    EXPECT_EQ(r.cost, 2u);
    EXPECT_EQ(r.witness.swaps, (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(r.witness.substitutions.empty());

    EXPECT_EQ(sh_distance(w("abc"), w("abc")).cost, 0u);

    const auto b = sh_distance(w("baba"), w("abca"));
    EXPECT_EQ(b.cost, 2u);
    EXPECT_EQ(b.witness.swaps, (std::vector<std::size_t>{0}));
    EXPECT_EQ(b.witness.substitutions, (std::vector<std::size_t>{2}));

    EXPECT_THROW(sh_distance(w("ab"), w("abc")), LengthMismatch);
}

TEST(ShDistance, EqualLettersAreNeverSwapped)
{
    const auto r = sh_distance(w("aa"), w("aa"));
    EXPECT_TRUE(r.witness.swaps.empty());
}

TEST(ShProperties, GreedyIsOptimal)
{
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 5000; ++iter) {
        const std::size_t n = 1 + rng() % 8;
        const Instance in = random_instance(rng, n, 2, 2 + rng() % 2);
        const auto r = sh_distance(in[0], in[1]);
        ASSERT_EQ(r.cost, naive_sh_distance(in[0].symbols(), in[1].symbols()))
            << in[0].to_utf8() << " " << in[1].to_utf8();
        EXPECT_EQ(r.cost, r.witness.cost());
        EXPECT_EQ(sh_cost(in[0].symbols(), in[1].symbols()), r.cost);
        EXPECT_EQ(sh_distance(in[1], in[0]).cost, r.cost);
        expect_witness_valid(in[0], in[1], r.witness);
    }
}

TEST(ShProperties, SandwichAndSwapBound)
{
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 10000; ++iter) {
        const Instance in = random_instance(rng, 1 + rng() % 12, 2, 2 + rng() % 3);
        const std::size_t sh = sh_distance(in[0], in[1]).cost;
        const std::size_t ham = hamming_distance(in[0], in[1]);
        EXPECT_LE(sh, ham);
        EXPECT_LE(ham, 2 * sh);
        if (const auto ds = swap_distance(in[0], in[1]))
            EXPECT_LE(sh, *ds);
    }
}

TEST(ShProperties, WeakenedTriangle)
{
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 10000; ++iter) {
        const Instance in = random_instance(rng, 1 + rng() % 12, 3, 2 + rng() % 3);
        const std::size_t st = sh_distance(in[0], in[1]).cost;
        const std::size_t tu = sh_distance(in[1], in[2]).cost;
        const std::size_t su = sh_distance(in[0], in[2]).cost;
        EXPECT_LE(su, std::min(2 * st + tu, st + 2 * tu));
    }
}
