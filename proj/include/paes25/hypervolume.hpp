/**
 * @file hypervolume.hpp
 * @brief Exact hypervolume over integer objective vectors (maximisation).
 *
 * The hypervolume of a set S with reference point h is the measure of the
 * union of boxes [h, f(x)] for x in S. With integer inputs it equals the
 * number of unit cells [u, u+1) with h <= u <= f(x) - 1 for some x.
 *
 * Two dimensions use a sort-and-sweep. Three or more dimensions count cells
 * on the per-axis compressed coordinate grid: a cell is covered iff some
 * point is componentwise above it, which a suffix-OR along every axis
 * resolves in O(cells * m). Grids above kMaxDenseCells fall back to slicing
 * along the last axis.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace paes25 {

class ReferencePoint {
public:
    explicit ReferencePoint(std::vector<int> h) : h_(std::move(h)) {
        if (h_.empty()) throw ConfigError("reference point must have at least one component");
        for (int v : h_) {
            if (v > 0) throw ConfigError("reference point components must be <= 0");
        }
    }

    /// (value, ..., value); the default (-1, ..., -1) matches the lattice formulas.
    static ReferencePoint uniform(std::size_t m, int value = -1) {
        return ReferencePoint(std::vector<int>(m, value));
    }

    std::size_t size() const noexcept { return h_.size(); }
    int operator[](std::size_t i) const noexcept { return h_[i]; }
    std::span<const int> values() const noexcept { return h_; }

    friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;

private:
    std::vector<int> h_;
};

namespace detail {

inline constexpr std::size_t kMaxDenseCells = std::size_t{1} << 25;

/// Points with some coordinate at or below h span no volume.
inline std::vector<int> clip_to_reference(std::span<const int> flat, std::size_t m, const ReferencePoint& h) {
    std::vector<int> kept;
    kept.reserve(flat.size());
    for (std::size_t p = 0; p + m <= flat.size(); p += m) {
        bool positive = true;
        for (std::size_t i = 0; i < m; ++i) positive = positive && flat[p + i] > h[i];
        if (positive) kept.insert(kept.end(), flat.begin() + static_cast<std::ptrdiff_t>(p),
                                  flat.begin() + static_cast<std::ptrdiff_t>(p + m));
    }
    return kept;
}

inline std::int64_t sweep_2d(std::span<const int> flat, int h0, int h1) {
    const std::size_t k = flat.size() / 2;
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return flat[2 * a] != flat[2 * b] ? flat[2 * a] > flat[2 * b] : flat[2 * a + 1] > flat[2 * b + 1];
    });
    std::int64_t area = 0;
    int best_y = h1;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t p = order[i];
        best_y = std::max(best_y, flat[2 * p + 1]);
        const int next_x = i + 1 < k ? flat[2 * order[i + 1]] : h0;
        area += static_cast<std::int64_t>(flat[2 * p] - next_x) * (best_y - h1);
    }
    return area;
}

inline std::int64_t dense_grid(std::span<const int> flat, std::size_t m,
                               const std::vector<std::vector<int>>& breaks) {
    std::vector<std::size_t> extent(m);
    std::vector<std::size_t> stride(m);
    std::size_t cells = 1;
    for (std::size_t i = m; i-- > 0;) {
        extent[i] = breaks[i].size() - 1;
        stride[i] = cells;
        cells *= extent[i];
    }
    std::vector<std::uint8_t> covered(cells, 0);
    for (std::size_t p = 0; p + m <= flat.size(); p += m) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto r = static_cast<std::size_t>(
                std::lower_bound(breaks[i].begin(), breaks[i].end(), flat[p + i]) - breaks[i].begin());
            idx += (r - 1) * stride[i];
        }
        covered[idx] = 1;
    }
    // covered[j] |= covered[j + e_axis], iterating j downwards so the suffix accumulates.
    for (std::size_t axis = 0; axis < m; ++axis) {
        for (std::size_t j = cells; j-- > 0;) {
            if ((j / stride[axis]) % extent[axis] + 1 < extent[axis]) covered[j] |= covered[j + stride[axis]];
        }
    }
    std::int64_t volume = 0;
    std::vector<std::size_t> digit(m, 0);
    for (std::size_t j = 0; j < cells; ++j) {
        if (covered[j]) {
            std::int64_t cell = 1;
            for (std::size_t i = 0; i < m; ++i) cell *= breaks[i][digit[i] + 1] - breaks[i][digit[i]];
            volume += cell;
        }
        for (std::size_t i = m; i-- > 0;) {
            if (++digit[i] < extent[i]) break;
            digit[i] = 0;
        }
    }
    return volume;
}

inline std::int64_t slice(std::vector<int> flat, std::size_t m, const ReferencePoint& h) {
    if (flat.empty()) return 0;
    if (m == 2) return sweep_2d(flat, h[0], h[1]);
    const std::size_t k = flat.size() / m;
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return flat[a * m + m - 1] > flat[b * m + m - 1]; });
    std::int64_t volume = 0;
    std::vector<int> projected;
    std::vector<int> sub_h(h.values().begin(), h.values().end() - 1);
    const ReferencePoint sub_ref(sub_h);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t p = order[i];
        projected.insert(projected.end(), flat.begin() + static_cast<std::ptrdiff_t>(p * m),
                         flat.begin() + static_cast<std::ptrdiff_t>(p * m + m - 1));
        const int top = flat[p * m + m - 1];
        const int bottom = i + 1 < k ? flat[order[i + 1] * m + m - 1] : h[m - 1];
        if (top != bottom) volume += static_cast<std::int64_t>(top - bottom) * slice(projected, m - 1, sub_ref);
    }
    return volume;
}

inline void check_dimension(std::span<const int> flat, std::size_t m, const ReferencePoint& h) {
    if (m != h.size()) throw DimensionError("hypervolume: reference point has wrong dimension");
    if (m == 0 || flat.size() % m != 0) throw DimensionError("hypervolume: flat point buffer is ragged");
}

}  // namespace detail

/// Hypervolume of `count = flat.size() / m` points stored row-major in `flat`.
inline std::int64_t hypervolume(std::span<const int> flat, std::size_t m, const ReferencePoint& h) {
    detail::check_dimension(flat, m, h);
    std::vector<int> pts = detail::clip_to_reference(flat, m, h);
    if (pts.empty()) return 0;
    if (m == 1) {
        int best = h[0];
        for (int v : pts) best = std::max(best, v);
        return best - h[0];
    }
    if (m == 2) return detail::sweep_2d(pts, h[0], h[1]);

    std::vector<std::vector<int>> breaks(m);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < m; ++i) {
        breaks[i].push_back(h[i]);
        for (std::size_t p = i; p < pts.size(); p += m) breaks[i].push_back(pts[p]);
        std::sort(breaks[i].begin(), breaks[i].end());
        breaks[i].erase(std::unique(breaks[i].begin(), breaks[i].end()), breaks[i].end());
        const std::size_t extent = breaks[i].size() - 1;
        cells = cells > detail::kMaxDenseCells / extent ? detail::kMaxDenseCells + 1 : cells * extent;
    }
    if (cells <= detail::kMaxDenseCells) return detail::dense_grid(pts, m, breaks);
    return detail::slice(std::move(pts), m, h);
}

inline std::vector<int> flatten(std::span<const FitnessVector> points, std::size_t m) {
    std::vector<int> flat;
    flat.reserve(points.size() * m);
    for (const auto& p : points) {
        if (p.size() != m) throw DimensionError("hypervolume: points have differing objective counts");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return flat;
}

inline std::int64_t hypervolume(std::span<const FitnessVector> points, const ReferencePoint& h) {
    return hypervolume(flatten(points, h.size()), h.size(), h);
}

/// hv(others + {x}) - hv(others).
inline std::int64_t hv_contribution(const FitnessVector& x, std::span<const FitnessVector> others,
                                    const ReferencePoint& h) {
    if (x.size() != h.size()) throw DimensionError("hv_contribution: point has wrong dimension");
    std::vector<int> without = flatten(others, h.size());
    std::vector<int> with = without;
    with.insert(with.end(), x.begin(), x.end());
    return hypervolume(with, h.size(), h) - hypervolume(without, h.size(), h);
}

/**
 * @brief Contribution hv(S) - hv(S \ {p}) of every point p of S.
 *
 * Bi-objective sets whose points are pairwise incomparable and above h take
 * the closed form (x_i - x_{i-1}) * (y_i - y_{i+1}) after sorting by the
 * first objective; everything else removes one point at a time.
 */
inline std::vector<std::int64_t> hv_contributions(std::span<const int> flat, std::size_t m,
                                                  const ReferencePoint& h) {
    detail::check_dimension(flat, m, h);
    const std::size_t k = flat.size() / m;
    std::vector<std::int64_t> contrib(k, 0);
    if (k == 0) return contrib;

    if (m == 2) {
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return flat[2 * a] < flat[2 * b]; });
        bool antichain = true;
        for (std::size_t i = 0; i < k && antichain; ++i) {
            const std::size_t p = order[i];
            antichain = flat[2 * p] > h[0] && flat[2 * p + 1] > h[1];
            if (i + 1 < k) {
                const std::size_t q = order[i + 1];
                antichain = antichain && flat[2 * q] > flat[2 * p] && flat[2 * q + 1] < flat[2 * p + 1];
            }
        }
        if (antichain) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t p = order[i];
                const int left = i == 0 ? h[0] : flat[2 * order[i - 1]];
                const int below = i + 1 == k ? h[1] : flat[2 * order[i + 1] + 1];
                contrib[p] = static_cast<std::int64_t>(flat[2 * p] - left) * (flat[2 * p + 1] - below);
            }
            return contrib;
        }
    }

    const std::int64_t total = hypervolume(flat, m, h);
    std::vector<int> rest;
    rest.reserve(flat.size());
    for (std::size_t p = 0; p < k; ++p) {
        rest.clear();
        for (std::size_t q = 0; q < k; ++q) {
            if (q == p) continue;
            rest.insert(rest.end(), flat.begin() + static_cast<std::ptrdiff_t>(q * m),
                        flat.begin() + static_cast<std::ptrdiff_t>(q * m + m));
        }
        contrib[p] = total - hypervolume(rest, m, h);
    }
    return contrib;
}

/**
 * @brief Hypervolume, w.r.t. (-1,-1), of the hole-free LOTZ chain
 * {(i, n-i) : a <= i <= b}: (n+1)(b+1) - a(a+1)/2 - b(b+1)/2.
 */
inline std::int64_t chain_hv_formula(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (a < 0 || a > b || b > n) throw RangeError("chain_hv_formula: requires 0 <= a <= b <= n");
    return (n + 1) * (b + 1) - a * (a + 1) / 2 - b * (b + 1) / 2;
}

}  // namespace paes25
