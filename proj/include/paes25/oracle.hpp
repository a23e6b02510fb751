/**
 * @file oracle.hpp
 * @brief Ground truth that does not go through the PAES engine: random
 * walks on grid graphs, exhaustive Pareto fronts and maximum antichains.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "benchmarks.hpp"
#include "core.hpp"
#include "hypervolume.hpp"
#include "rng.hpp"

namespace paes25::oracle {

enum class WalkMode { Simple, Lazy };

inline WalkMode parse_walk_mode(std::string_view s) {
    if (s == "simple") return WalkMode::Simple;
    if (s == "lazy") return WalkMode::Lazy;
    throw ConfigError("unknown walk mode '" + std::string(s) + "' (expected simple|lazy)");
}

/**
 * @brief Random walk on the k-dimensional grid {0..axis_nodes-1}^k.
 *
 * Simple: each step moves to a uniformly chosen neighbour. Lazy: each step
 * draws an index in 0..lazy_n-1; index 2j moves +1 along axis j, index 2j+1
 * moves -1, every other index (and any move off the grid) stays put. That
 * is per-direction probability 1/lazy_n and self-loop mass 1 - deg(v)/lazy_n.
 */
struct GridWalkConfig {
    int dims = 1;
    int axis_nodes = 2;
    WalkMode mode = WalkMode::Simple;
    int lazy_n = 2;
    std::vector<int> start;

    void validate() const {
        if (dims < 1) throw ConfigError("grid walk: dims must be positive");
        if (axis_nodes < 2) throw ConfigError("grid walk: axis_nodes must be at least 2");
        if (mode == WalkMode::Lazy && lazy_n < 2 * dims) {
            throw ConfigError("grid walk: lazy walk needs n >= 2 * dims so that move probabilities sum to <= 1");
        }
        if (!start.empty()) {
            if (static_cast<int>(start.size()) != dims) throw ConfigError("grid walk: start has wrong dimension");
            for (int s : start) {
                if (s < 0 || s >= axis_nodes) throw ConfigError("grid walk: start outside the grid");
            }
        }
    }

    std::uint64_t node_count() const {
        std::uint64_t c = 1;
        for (int i = 0; i < dims; ++i) c *= static_cast<std::uint64_t>(axis_nodes);
        return c;
    }
};

/// Steps until every node has been visited; lazy walks count idle steps.
inline std::uint64_t cover_time(const GridWalkConfig& cfg, Rng& rng) {
    cfg.validate();
    const auto k = static_cast<std::size_t>(cfg.dims);
    const std::uint64_t total = cfg.node_count();
    if (total > (std::uint64_t{1} << 32)) throw TooLargeError("grid walk: grid too large");
    std::vector<int> pos = cfg.start.empty() ? std::vector<int>(k, 0) : cfg.start;
    std::vector<std::uint64_t> stride(k);
    std::uint64_t s = 1;
    for (std::size_t i = k; i-- > 0;) {
        stride[i] = s;
        s *= static_cast<std::uint64_t>(cfg.axis_nodes);
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < k; ++i) index += static_cast<std::uint64_t>(pos[i]) * stride[i];

    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    visited[static_cast<std::size_t>(index)] = true;
    std::uint64_t seen = 1;
    std::uint64_t steps = 0;
    std::vector<int> moves;  // encoded as 2*axis + (0 for +1, 1 for -1)
    moves.reserve(2 * k);
    const int top = cfg.axis_nodes - 1;

    while (seen < total) {
        ++steps;
        int move = -1;
        if (cfg.mode == WalkMode::Simple) {
            moves.clear();
            for (std::size_t i = 0; i < k; ++i) {
                if (pos[i] < top) moves.push_back(static_cast<int>(2 * i));
                if (pos[i] > 0) moves.push_back(static_cast<int>(2 * i + 1));
            }
            move = moves[uniform_index(rng, moves.size())];
        } else {
            const auto draw = uniform_index(rng, static_cast<std::size_t>(cfg.lazy_n));
            if (draw < 2 * k) {
                const std::size_t axis = draw / 2;
                const bool up = draw % 2 == 0;
                if ((up && pos[axis] < top) || (!up && pos[axis] > 0)) move = static_cast<int>(draw);
            }
        }
        if (move < 0) continue;
        const auto axis = static_cast<std::size_t>(move / 2);
        if (move % 2 == 0) {
            ++pos[axis];
            index += stride[axis];
        } else {
            --pos[axis];
            index -= stride[axis];
        }
        if (!visited[static_cast<std::size_t>(index)]) {
            visited[static_cast<std::size_t>(index)] = true;
            ++seen;
        }
    }
    return steps;
}

/// Transition law of the lazy walk from `node` as integer weights out of `lazy_n`.
struct StepLaw {
    std::map<std::vector<int>, int> moves;  // displacement -> weight
    int stay = 0;
    int denominator = 1;

    friend bool operator==(const StepLaw&, const StepLaw&) = default;
};

inline StepLaw lazy_step_law(const GridWalkConfig& cfg, std::span<const int> node) {
    cfg.validate();
    if (static_cast<int>(node.size()) != cfg.dims) throw DimensionError("lazy_step_law: node has wrong dimension");
    StepLaw law;
    law.denominator = cfg.lazy_n;
    law.stay = cfg.lazy_n;
    for (int axis = 0; axis < cfg.dims; ++axis) {
        for (int dir : {+1, -1}) {
            const int next = node[static_cast<std::size_t>(axis)] + dir;
            if (next < 0 || next >= cfg.axis_nodes) continue;
            std::vector<int> delta(static_cast<std::size_t>(cfg.dims), 0);
            delta[static_cast<std::size_t>(axis)] = dir;
            law.moves[delta] += 1;
            law.stay -= 1;
        }
    }
    return law;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

inline constexpr int kMaxEnumerationBits = 20;

/// Distinct fitness vectors over all of {0,1}^n.
inline std::vector<FitnessVector> attainable_fitness(const Benchmark& b) {
    if (b.n() > kMaxEnumerationBits) throw TooLargeError("enumeration refused: n > 20");
    std::set<FitnessVector> seen;
    const auto n = static_cast<std::size_t>(b.n());
    Bitstring x(n);
    FitnessVector f(static_cast<std::size_t>(b.m()));
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < count; ++code) {
        for (std::size_t i = 0; i < n; ++i) x.set(i, ((code >> i) & 1u) != 0);
        b.evaluate_into(x, f.values());
        seen.insert(f);
    }
    return {seen.begin(), seen.end()};
}

/// Non-dominated fitness vectors over all of {0,1}^n, sorted.
inline std::vector<FitnessVector> brute_force_front(const Benchmark& b) {
    const std::vector<FitnessVector> all = attainable_fitness(b);
    std::vector<FitnessVector> front;
    for (const auto& v : all) {
        const bool dominated =
            std::any_of(all.begin(), all.end(), [&](const FitnessVector& u) { return strictly_dominates(u, v); });
        if (!dominated) front.push_back(v);
    }
    return front;
}

/**
 * @brief Size of a largest set of pairwise incomparable vectors.
 *
 * Dilworth: equals the minimum number of chains covering the strict
 * dominance order, which is |V| minus a maximum matching in the bipartite
 * graph with an edge u -> v whenever u strictly dominates v.
 */
inline std::size_t max_antichain_size(std::span<const FitnessVector> input) {
    std::vector<FitnessVector> v(input.begin(), input.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    const std::size_t k = v.size();
    if (k > 5000) throw TooLargeError("max_antichain_size: more than 5000 distinct vectors");
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a != b && strictly_dominates(v[a], v[b])) adj[a].push_back(b);
        }
    }
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(k, kFree);
    std::vector<std::size_t> stamp(k, 0);
    std::size_t round = 0;

    // Iterative Kuhn augmenting path search.
    auto augment = [&](std::size_t root) {
        ++round;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        std::vector<std::size_t> via;  // right vertex taken at each depth
        while (!stack.empty()) {
            auto& [left, next] = stack.back();
            if (next == adj[left].size()) {
                stack.pop_back();
                if (!via.empty()) via.pop_back();
                continue;
            }
            const std::size_t right = adj[left][next++];
            if (stamp[right] == round) continue;
            stamp[right] = round;
            if (match_right[right] == kFree) {
                via.push_back(right);
                // stack[d].first was matched through via[d]
                for (std::size_t d = 0; d < via.size(); ++d) match_right[via[d]] = stack[d].first;
                return true;
            }
            via.push_back(right);
            stack.push_back({match_right[right], 0});
        }
        return false;
    };

    std::size_t matching = 0;
    for (std::size_t a = 0; a < k; ++a) {
        if (augment(a)) ++matching;
    }
    return k - matching;
}

inline std::size_t max_antichain_size(const Benchmark& b) {
    const std::vector<FitnessVector> all = attainable_fitness(b);
    return max_antichain_size(all);
}

/// Unit-cell count of the dominated region, one cell at a time; independent of the sweep and grid code.
inline std::int64_t brute_force_hypervolume(std::span<const FitnessVector> points, const ReferencePoint& h) {
    const std::size_t m = h.size();
    std::vector<int> hi(m);
    for (std::size_t i = 0; i < m; ++i) hi[i] = h[i];
    for (const auto& p : points) {
        if (p.size() != m) throw DimensionError("brute_force_hypervolume: dimension mismatch");
        for (std::size_t i = 0; i < m; ++i) hi[i] = std::max(hi[i], p[i]);
    }
    std::vector<int> u(h.values().begin(), h.values().end());
    for (std::size_t i = 0; i < m; ++i) {
        if (hi[i] <= h[i]) return 0;
    }
    std::int64_t cells = 0;
    while (true) {
        for (const auto& p : points) {
            bool covers = true;
            for (std::size_t i = 0; i < m && covers; ++i) covers = u[i] <= p[i] - 1;
            if (covers) {
                ++cells;
                break;
            }
        }
        std::size_t i = 0;
        for (; i < m; ++i) {
            if (++u[i] < hi[i]) break;
            u[i] = h[i];
        }
        if (i == m) break;
    }
    return cells;
}

}  // namespace paes25::oracle
