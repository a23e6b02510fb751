/**
 * @file archivers.hpp
 * @brief Policies consulted when the archive is full and the candidate is
 * incomparable to every member.
 *
 * A decision never mutates the archive; the engine applies it. Whenever the
 * candidate ties with a member for the losing position, the candidate wins.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archive.hpp"
#include "core.hpp"
#include "hypervolume.hpp"
#include "rng.hpp"

namespace paes25 {

enum class ArchiverKind { None, Aga, Hva, Mga };

inline const char* to_string(ArchiverKind k) {
    switch (k) {
        case ArchiverKind::None: return "none";
        case ArchiverKind::Aga: return "aga";
        case ArchiverKind::Hva: return "hva";
        case ArchiverKind::Mga: return "mga";
    }
    return "?";
}

inline ArchiverKind parse_archiver_kind(std::string_view name) {
    if (name == "none") return ArchiverKind::None;
    if (name == "aga") return ArchiverKind::Aga;
    if (name == "hva") return ArchiverKind::Hva;
    if (name == "mga") return ArchiverKind::Mga;
    throw ConfigError("unknown archiver '" + std::string(name) + "' (expected aga|hva|mga|none)");
}

struct ArchiverDecision {
    bool accepted = false;
    /// Archive index of the member to drop; set iff accepted.
    std::optional<std::size_t> removal;
};

// ---------------------------------------------------------------------------
// Adaptive grid

/// Each axis [0, grid_range] is split into 2^bisections intervals, the last one closed.
struct AgaParams {
    int grid_range = 1;
    int bisections = 1;

    AgaParams() = default;
    AgaParams(int range, int ell) : grid_range(range), bisections(ell) {
        if (range < 1) throw ConfigError("aga: grid range must be positive");
        if (ell < 1 || ell > 30) throw ConfigError("aga: bisections must be in 1..30");
    }

    /// grid_range = f_max and bisections = max(1, ceil(log2(L) / m) + 1).
    static AgaParams defaults(int f_max, std::size_t archive_size, std::size_t m) {
        const double per_axis = std::log2(static_cast<double>(archive_size)) / static_cast<double>(m);
        const int ell = std::max(1, static_cast<int>(std::ceil(per_axis)) + 1);
        return {std::max(1, f_max), ell};
    }

    int cells_per_axis() const noexcept { return 1 << bisections; }
};

inline void aga_cell_into(std::span<const int> v, const AgaParams& p, std::span<int> out) {
    const std::int64_t cells = p.cells_per_axis();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > p.grid_range) throw RangeError("aga_cell: objective value outside [0, grid_range]");
        const std::int64_t c = static_cast<std::int64_t>(v[i]) * cells / p.grid_range;
        out[i] = static_cast<int>(std::min(c, cells - 1));
    }
}

inline std::vector<int> aga_cell(std::span<const int> v, const AgaParams& p) {
    std::vector<int> cell(v.size());
    aga_cell_into(v, p, cell);
    return cell;
}

/**
 * @brief Always accepts; removes a uniformly chosen member of a uniformly
 * chosen most-crowded cell of A + {c}.
 *
 * Occupancy counts the candidate, but a cell holding only the candidate is
 * never picked since it has no removable member.
 */
inline ArchiverDecision aga_decide(const Archive& archive, std::span<const int> candidate, const AgaParams& p,
                                   Rng& rng) {
    const std::size_t m = archive.objectives();
    const std::size_t k = archive.size() + 1;
    std::vector<int> cells(k * m);
    for (std::size_t i = 0; i < archive.size(); ++i) {
        aga_cell_into(archive.fitness(i), p, std::span<int>(cells).subspan(i * m, m));
    }
    aga_cell_into(candidate, p, std::span<int>(cells).subspan(archive.size() * m, m));

    auto key = [&](std::size_t i) { return std::span<const int>(cells).subspan(i * m, m); };
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = key(a);
        const auto kb = key(b);
        return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
    });

    const std::size_t cand = archive.size();
    struct Group {
        std::size_t begin;
        std::size_t end;
    };
    std::vector<Group> best;
    std::size_t best_size = 0;
    for (std::size_t g = 0; g < k;) {
        std::size_t e = g + 1;
        while (e < k && std::ranges::equal(key(order[e]), key(order[g]))) ++e;
        const std::size_t size = e - g;
        const bool removable = size > 1 || order[g] != cand;
        if (removable) {
            if (size > best_size) {
                best.clear();
                best_size = size;
            }
            if (size == best_size) best.push_back({g, e});
        }
        g = e;
    }

    const Group chosen = best[uniform_index(rng, best.size())];
    std::vector<std::size_t> members;
    for (std::size_t i = chosen.begin; i < chosen.end; ++i) {
        if (order[i] != cand) members.push_back(order[i]);
    }
    return {true, members[uniform_index(rng, members.size())]};
}

// ---------------------------------------------------------------------------
// Hypervolume

/// Rejects iff the candidate is the unique smallest contributor to hv(A + {c}).
inline ArchiverDecision hva_decide(const Archive& archive, std::span<const int> candidate, const ReferencePoint& h,
                                   Rng& rng) {
    const std::size_t m = archive.objectives();
    std::vector<int> points(archive.fitness_data().begin(), archive.fitness_data().end());
    points.insert(points.end(), candidate.begin(), candidate.end());
    const std::vector<std::int64_t> contrib = hv_contributions(points, m, h);

    const std::size_t cand = archive.size();
    const std::int64_t least = *std::min_element(contrib.begin(), contrib.end());
    std::vector<std::size_t> losers;
    for (std::size_t i = 0; i < cand; ++i) {
        if (contrib[i] == least) losers.push_back(i);
    }
    if (losers.empty()) return {false, std::nullopt};
    return {true, losers[uniform_index(rng, losers.size())]};
}

// ---------------------------------------------------------------------------
// Multi-level grid

inline std::vector<int> mga_box(std::span<const int> v, int level) {
    std::vector<int> box(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw RangeError("mga_box: objective values must be non-negative");
        box[i] = level >= 31 ? 0 : v[i] >> level;
    }
    return box;
}

namespace detail {

inline bool boxes_weakly_comparable(std::span<const int> flat, std::size_t m, int level, std::size_t a,
                                    std::size_t b) {
    bool ge = true;
    bool le = true;
    for (std::size_t i = 0; i < m && (ge || le); ++i) {
        const int x = flat[a * m + i] >> level;
        const int y = flat[b * m + i] >> level;
        ge = ge && x >= y;
        le = le && x <= y;
    }
    return ge || le;
}

}  // namespace detail

/// Smallest coarseness level at which two of the boxes are weakly comparable (equality counts).
inline int mga_level(std::span<const int> flat, std::size_t m) {
    const std::size_t k = flat.size() / m;
    if (k < 2) throw RangeError("mga_level: needs at least two points");
    int top = 0;
    for (int v : flat) {
        if (v < 0) throw RangeError("mga_level: objective values must be non-negative");
        while (top < 31 && (v >> top) != 0) ++top;
    }
    for (int level = 0; level < top; ++level) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                if (detail::boxes_weakly_comparable(flat, m, level, a, b)) return level;
            }
        }
    }
    return top;
}

inline int mga_level(std::span<const FitnessVector> points) {
    if (points.empty()) throw RangeError("mga_level: needs at least two points");
    return mga_level(flatten(points, points.front().size()), points.front().size());
}

/**
 * @brief Rejects iff, at the level where boxes first become comparable, the
 * candidate's box is the only one weakly dominated by another box; otherwise
 * removes a uniformly chosen other member whose box is weakly dominated.
 */
inline ArchiverDecision mga_decide(const Archive& archive, std::span<const int> candidate, Rng& rng) {
    const std::size_t m = archive.objectives();
    std::vector<int> points(archive.fitness_data().begin(), archive.fitness_data().end());
    points.insert(points.end(), candidate.begin(), candidate.end());
    const std::size_t k = archive.size() + 1;
    const std::size_t cand = archive.size();
    const int level = mga_level(points, m);

    auto dominated_at_level = [&](std::size_t i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            bool ge = true;
            for (std::size_t d = 0; d < m && ge; ++d) ge = (points[j * m + d] >> level) >= (points[i * m + d] >> level);
            if (ge) return true;
        }
        return false;
    };

    std::vector<std::size_t> losers;
    for (std::size_t i = 0; i < cand; ++i) {
        if (dominated_at_level(i)) losers.push_back(i);
    }
    if (losers.empty()) {
        // The level guarantees a weakly comparable pair, so the candidate must be the dominated one.
        if (!dominated_at_level(cand)) throw std::logic_error("mga_decide: no box dominated at the comparable level");
        return {false, std::nullopt};
    }
    return {true, losers[uniform_index(rng, losers.size())]};
}

// ---------------------------------------------------------------------------

/// An archiver kind with its parameters; `decide` requires a full archive and an incomparable candidate.
class Archiver {
public:
    Archiver() = default;
    static Archiver none() { return Archiver(ArchiverKind::None); }
    static Archiver aga(AgaParams p) {
        Archiver a(ArchiverKind::Aga);
        a.aga_ = p;
        return a;
    }
    static Archiver hva(ReferencePoint h) {
        Archiver a(ArchiverKind::Hva);
        a.reference_ = std::move(h);
        return a;
    }
    static Archiver mga() { return Archiver(ArchiverKind::Mga); }

    /// Kind with default parameters for a benchmark of this m, f_max and archive size.
    static Archiver with_defaults(ArchiverKind kind, int m, int f_max, std::size_t archive_size) {
        switch (kind) {
            case ArchiverKind::None: return none();
            case ArchiverKind::Aga: return aga(AgaParams::defaults(f_max, archive_size, static_cast<std::size_t>(m)));
            case ArchiverKind::Hva: return hva(ReferencePoint::uniform(static_cast<std::size_t>(m)));
            case ArchiverKind::Mga: return mga();
        }
        return none();
    }

    ArchiverKind kind() const noexcept { return kind_; }
    const AgaParams& aga_params() const noexcept { return aga_; }
    const std::optional<ReferencePoint>& reference() const noexcept { return reference_; }

    ArchiverDecision decide(const Archive& archive, std::span<const int> candidate, Rng& rng) const {
        switch (kind_) {
            case ArchiverKind::None: return {false, std::nullopt};
            case ArchiverKind::Aga: return aga_decide(archive, candidate, aga_, rng);
            case ArchiverKind::Hva: return hva_decide(archive, candidate, *reference_, rng);
            case ArchiverKind::Mga: return mga_decide(archive, candidate, rng);
        }
        return {false, std::nullopt};
    }

private:
    explicit Archiver(ArchiverKind k) : kind_(k) {}

    ArchiverKind kind_ = ArchiverKind::None;
    AgaParams aga_{};
    std::optional<ReferencePoint> reference_;
};

}  // namespace paes25
