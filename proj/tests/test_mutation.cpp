#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "paes25/mutation.hpp"

using namespace paes25;

TEST(OneBit, UniformPosition) {
    Rng rng(5);
    std::map<std::string, int> seen;
    const auto x = Bitstring::from_string("000");
    constexpr int trials = 30000;
    for (int i = 0; i < trials; ++i) ++seen[mutate(MutationKind::OneBit, x, rng).to_string()];
    ASSERT_EQ(seen.size(), 3u);
    for (const auto& key : {"100", "010", "001"}) {
        EXPECT_NEAR(seen[key] / double(trials), 1.0 / 3.0, 0.015) << key;
    }
}

TEST(OneBit, ExactlyOneFlip) {
    Rng rng(6);
    Mutation op(MutationKind::OneBit, 40);
    std::vector<std::size_t> flipped;
    for (int i = 0; i < 1000; ++i) {
        Bitstring x(40);
        op.apply(x, rng, flipped);
        ASSERT_EQ(flipped.size(), 1u);
        EXPECT_EQ(x.count(), 1u);
    }
}

TEST(StandardBit, FlipCountsAreBinomial) {
    constexpr std::size_t n = 20;
    constexpr int trials = 100000;
    Rng rng(7);
    Mutation op(MutationKind::StandardBit, n);
    std::vector<std::size_t> flipped;
    std::vector<int> per_bit(n, 0);
    std::map<std::size_t, int> by_count;
    int pair01 = 0;
    for (int t = 0; t < trials; ++t) {
        Bitstring x(n);
        op.apply(x, rng, flipped);
        const std::set<std::size_t> distinct(flipped.begin(), flipped.end());
        ASSERT_EQ(distinct.size(), flipped.size());
        ASSERT_EQ(x.count(), flipped.size());
        ++by_count[flipped.size()];
        for (auto p : flipped) ++per_bit[p];
        pair01 += x.test(0) && x.test(1);
    }
    const double p = 1.0 / n;
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(per_bit[i] / double(trials), p, 0.004) << i;
    // P(no flip) = (1 - 1/n)^n and P(one flip) = (1 - 1/n)^(n-1).
    EXPECT_NEAR(by_count[0] / double(trials), std::pow(1 - p, n), 0.006);
    EXPECT_NEAR(by_count[1] / double(trials), std::pow(1 - p, n - 1), 0.006);
    EXPECT_NEAR(pair01 / double(trials), p * p, 0.0012);
}

TEST(StandardBit, CanLeaveStringUnchanged) {
    Rng rng(8);
    const auto x = Bitstring::from_string("1010");
    int same = 0;
    for (int i = 0; i < 2000; ++i) same += mutate(MutationKind::StandardBit, x, rng) == x;
    EXPECT_GT(same, 0);
}

TEST(Mutation, Names) {
    EXPECT_EQ(parse_mutation_kind("one-bit"), MutationKind::OneBit);
    EXPECT_EQ(parse_mutation_kind("standard-bit"), MutationKind::StandardBit);
    EXPECT_THROW(parse_mutation_kind("two-bit"), ConfigError);
    EXPECT_THROW(Mutation(MutationKind::OneBit, 0), ConfigError);
}
