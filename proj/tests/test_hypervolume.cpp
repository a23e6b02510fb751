#include <gtest/gtest.h>

#include <random>

#include "paes25/benchmarks.hpp"
#include "paes25/hypervolume.hpp"
#include "paes25/oracle.hpp"

using namespace paes25;

namespace {

const ReferencePoint h2 = ReferencePoint::uniform(2);

std::vector<FitnessVector> random_points(std::size_t m, std::size_t count, int hi, std::mt19937_64& gen) {
    std::vector<FitnessVector> pts;
    for (std::size_t i = 0; i < count; ++i) {
        FitnessVector v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<int>(gen() % static_cast<std::uint64_t>(hi + 2)) - 1;
        pts.push_back(v);
    }
    return pts;
}

}  // namespace

TEST(Hypervolume, SinglePoint) {
    for (int n : {1, 5, 12}) {
        for (int a = 0; a <= n; ++a) {
            const std::vector<FitnessVector> pts{{a, n - a}};
            EXPECT_EQ(hypervolume(pts, h2), (a + 1) * (n - a + 1));
        }
    }
}

TEST(Hypervolume, FullLotzFront) {
    const auto front = Benchmark::lotz(3).pareto_front_fitness();
    EXPECT_EQ(hypervolume(front, h2), 10);
}

TEST(Hypervolume, DuplicatesAndEmpty) {
    const std::vector<FitnessVector> dup{{2, 2}, {2, 2}};
    EXPECT_EQ(hypervolume(dup, ReferencePoint::uniform(2, 0)), 4);
    EXPECT_EQ(hypervolume(std::vector<FitnessVector>{}, h2), 0);
    EXPECT_THROW(hypervolume(dup, ReferencePoint::uniform(3)), DimensionError);
}

TEST(Hypervolume, PointsOnOrBelowReferenceAddNothing) {
    const std::vector<FitnessVector> pts{{-1, 5}, {3, -2}};
    EXPECT_EQ(hypervolume(pts, h2), 0);
}

TEST(Contribution, Examples) {
    const std::vector<FitnessVector> others{{0, 3}, {2, 1}};
    EXPECT_EQ(hv_contribution(FitnessVector{1, 2}, others, h2), 1);
    EXPECT_EQ(hv_contribution(FitnessVector{2, 1}, others, h2), 0);
    EXPECT_EQ(hv_contribution(FitnessVector{7, 0}, std::vector<FitnessVector>{}, h2), 8);
}

TEST(Contribution, AllPointsOfSmallSet) {
    // hv{(0,3),(1,2),(2,1)} = 9; dropping (0,3) leaves 8, (1,2) leaves 8, (2,1) leaves 7.
    const std::vector<int> flat{0, 3, 1, 2, 2, 1};
    EXPECT_EQ(hypervolume(flat, 2, h2), 9);
    EXPECT_EQ(hv_contributions(flat, 2, h2), (std::vector<std::int64_t>{1, 1, 2}));
}

TEST(Contribution, MatchesLeaveOneOut) {
    std::mt19937_64 gen(21);
    for (std::size_t m : {2u, 3u, 4u}) {
        const ReferencePoint h = ReferencePoint::uniform(m);
        for (int trial = 0; trial < 60; ++trial) {
            const auto pts = random_points(m, 1 + gen() % 7, 6, gen);
            const auto flat = flatten(pts, m);
            const auto got = hv_contributions(flat, m, h);
            const std::int64_t total = oracle::brute_force_hypervolume(pts, h);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                std::vector<FitnessVector> rest = pts;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                EXPECT_EQ(got[i], total - oracle::brute_force_hypervolume(rest, h)) << "m=" << m << " i=" << i;
            }
        }
    }
}

TEST(Hypervolume, AgreesWithCellCounting) {
    std::mt19937_64 gen(22);
    for (std::size_t m : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 150; ++trial) {
            const auto pts = random_points(m, gen() % 12, 8, gen);
            std::vector<int> h(m);
            for (auto& v : h) v = -static_cast<int>(gen() % 3);
            const ReferencePoint ref(h);
            EXPECT_EQ(hypervolume(pts, ref), oracle::brute_force_hypervolume(pts, ref)) << "m=" << m;
        }
    }
}

TEST(Hypervolume, SlicingAgreesWithCompressedGrid) {
    std::mt19937_64 gen(23);
    for (std::size_t m : {3u, 4u, 5u}) {
        const ReferencePoint h = ReferencePoint::uniform(m);
        for (int trial = 0; trial < 40; ++trial) {
            const auto pts = random_points(m, 1 + gen() % 20, 30, gen);
            const auto clipped = detail::clip_to_reference(flatten(pts, m), m, h);
            EXPECT_EQ(hypervolume(pts, h), detail::slice(clipped, m, h)) << "m=" << m;
        }
    }
}

TEST(ChainFormula, Examples) {
    EXPECT_EQ(chain_hv_formula(3, 0, 3), 10);
    EXPECT_EQ(chain_hv_formula(5, 2, 2), 12);
    for (int n : {6, 10, 17}) {
        for (int d = 0; d <= n; ++d) {
            EXPECT_EQ(2 * chain_hv_formula(n, 0, d), (d + 1) * (2 * n + 2 - d)) << n << " " << d;
            EXPECT_EQ(chain_hv_formula(n, 0, d), chain_hv_formula(n, n - d, n));
        }
    }
    EXPECT_THROW(chain_hv_formula(5, 3, 2), RangeError);
}

TEST(ChainFormula, MatchesCellCountingOnChains) {
    for (int n = 0; n <= 14; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = a; b <= n; ++b) {
                std::vector<FitnessVector> chain;
                for (int i = a; i <= b; ++i) chain.push_back({i, n - i});
                ASSERT_EQ(chain_hv_formula(n, a, b), oracle::brute_force_hypervolume(chain, h2));
            }
        }
    }
}
