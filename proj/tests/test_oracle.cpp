#include <gtest/gtest.h>

#include <cmath>

#include "paes25/oracle.hpp"

using namespace paes25;
using namespace paes25::oracle;

namespace {

double mean_cover(GridWalkConfig cfg, int reps, std::uint64_t seed) {
    double sum = 0;
    for (int r = 0; r < reps; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(cfg.axis_nodes), static_cast<std::uint64_t>(r)));
        sum += static_cast<double>(cover_time(cfg, rng));
    }
    return sum / reps;
}

}  // namespace

TEST(CoverTime, TwoNodePath) {
    GridWalkConfig cfg;
    cfg.axis_nodes = 2;
    Rng rng(1);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(cover_time(cfg, rng), 1u);
}

TEST(CoverTime, PathFromEndIsSquare) {
    // From an end of a path with N nodes the walk must reach the other end: (N-1)^2 expected steps.
    GridWalkConfig cfg;
    cfg.axis_nodes = 11;
    EXPECT_NEAR(mean_cover(cfg, 4000, 3), 100.0, 5.0);
}

TEST(CoverTime, LazyPathFromEnd) {
    // Path of 6 nodes, each direction taken with probability 1/10: hitting the far end from 0 takes 150 steps
    // in expectation (first-step equations).
    GridWalkConfig cfg;
    cfg.axis_nodes = 6;
    cfg.mode = WalkMode::Lazy;
    cfg.lazy_n = 10;
    EXPECT_NEAR(mean_cover(cfg, 4000, 4), 150.0, 8.0);
}

TEST(CoverTime, TwoDimensionalGridCoversEveryNode) {
    GridWalkConfig cfg;
    cfg.dims = 2;
    cfg.axis_nodes = 4;
    Rng rng(5);
    for (int i = 0; i < 50; ++i) EXPECT_GE(cover_time(cfg, rng), 15u);
}

TEST(CoverTime, Validation) {
    GridWalkConfig cfg;
    cfg.dims = 2;
    cfg.mode = WalkMode::Lazy;
    cfg.lazy_n = 3;
    Rng rng(0);
    EXPECT_THROW(cover_time(cfg, rng), ConfigError);
    cfg.lazy_n = 4;
    cfg.start = {0, 2};
    EXPECT_THROW(cover_time(cfg, rng), ConfigError);
    EXPECT_THROW(parse_walk_mode("drunk"), ConfigError);
}

TEST(StepLaw, CornerAndInterior) {
    GridWalkConfig cfg;
    cfg.dims = 2;
    cfg.axis_nodes = 3;
    cfg.mode = WalkMode::Lazy;
    cfg.lazy_n = 8;
    const std::vector<int> corner{0, 0};
    const auto c = lazy_step_law(cfg, corner);
    EXPECT_EQ(c.stay, 6);
    EXPECT_EQ(c.moves.size(), 2u);
    const std::vector<int> mid{1, 1};
    const auto m = lazy_step_law(cfg, mid);
    EXPECT_EQ(m.stay, 4);
    EXPECT_EQ(m.moves.size(), 4u);
    EXPECT_EQ(m.denominator, 8);
}

TEST(BruteForce, Fronts) {
    EXPECT_EQ(brute_force_front(Benchmark::lotz(3)), (std::vector<FitnessVector>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
    EXPECT_EQ(brute_force_front(Benchmark::omm(3)), (std::vector<FitnessVector>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
    EXPECT_EQ(brute_force_front(Benchmark::cocz(4)), (std::vector<FitnessVector>{{2, 4}, {3, 3}, {4, 2}}));
    EXPECT_THROW(brute_force_front(Benchmark::lotz(21)), TooLargeError);
}

TEST(Antichain, TwoObjectives) {
    for (int n = 2; n <= 14; ++n) EXPECT_EQ(max_antichain_size(Benchmark::lotz(n)), static_cast<std::size_t>(n + 1));
    for (int n : {3, 8, 13}) EXPECT_EQ(max_antichain_size(Benchmark::omm(n)), static_cast<std::size_t>(n + 1));
}

TEST(Antichain, FourObjectivesWithinBounds) {
    const std::size_t size = max_antichain_size(Benchmark::mlotz(4, 8));
    EXPECT_GE(static_cast<double>(size), 125.0 / 8.0);
    EXPECT_LE(size, 125u);
    EXPECT_GE(size, Benchmark::mlotz(4, 8).front_size());
}

TEST(Antichain, HandBuiltPosets) {
    // A chain, an antichain and a crown.
    EXPECT_EQ(max_antichain_size(std::vector<FitnessVector>{{0, 0}, {1, 1}, {2, 2}}), 1u);
    EXPECT_EQ(max_antichain_size(std::vector<FitnessVector>{{0, 2}, {1, 1}, {2, 0}}), 3u);
    EXPECT_EQ(max_antichain_size(std::vector<FitnessVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2u);
    EXPECT_EQ(max_antichain_size(std::vector<FitnessVector>{{1, 1}, {1, 1}}), 1u);
}

TEST(BruteForce, HypervolumeOfBoxes) {
    const ReferencePoint h = ReferencePoint::uniform(3);
    EXPECT_EQ(brute_force_hypervolume(std::vector<FitnessVector>{{1, 1, 1}}, h), 8);
    EXPECT_EQ(brute_force_hypervolume(std::vector<FitnessVector>{{1, 0, 0}, {0, 1, 0}}, h), 3);
    EXPECT_EQ(brute_force_hypervolume(std::vector<FitnessVector>{}, h), 0);
}
