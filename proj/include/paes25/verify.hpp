/**
 * @file verify.hpp
 * @brief Named property checks. Each suite takes key=value parameters and
 * returns a pass flag with JSON evidence.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "archivers.hpp"
#include "benchmarks.hpp"
#include "core.hpp"
#include "harness.hpp"
#include "hypervolume.hpp"
#include "oracle.hpp"
#include "paes.hpp"
#include "rng.hpp"

namespace paes25::verify {

/// Suite parameters; every key must be consumed, so typos are reported.
class Params {
public:
    Params() = default;

    static Params parse(std::span<const std::string> tokens) {
        Params p;
        for (const auto& t : tokens) {
            const auto eq = t.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError("suite parameter '" + t + "' is not key=value");
            if (!p.values_.emplace(t.substr(0, eq), t.substr(eq + 1)).second) {
                throw ConfigError("suite parameter '" + t.substr(0, eq) + "' given twice");
            }
        }
        return p;
    }

    Params& set(const std::string& key, const std::string& value) {
        values_[key] = value;
        return *this;
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string str(const std::string& key, const std::string& fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    template <class T>
    T num(const std::string& key, T fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        return it == values_.end() ? fallback : detail::parse_number<T>(it->second, key);
    }

    std::vector<int> ints(const std::string& key, std::vector<int> fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        std::vector<int> out;
        for (const auto& part : detail::split(it->second, ',')) out.push_back(detail::parse_number<int>(part, key));
        return out;
    }

    void finish() const {
        for (const auto& [k, v] : values_) {
            if (!used_.count(k)) throw ConfigError("unknown suite parameter '" + k + "'");
        }
    }

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

struct Report {
    std::string suite;
    bool pass = false;
    nlohmann::json evidence = nlohmann::json::object();

    nlohmann::json to_json() const { return {{"suite", suite}, {"pass", pass}, {"evidence", evidence}}; }
};

namespace detail {

inline int ceil_half(int L) { return (L + 1) / 2; }

inline bool all_pareto(const Paes& p) {
    for (std::size_t i = 0; i < p.archive().size(); ++i) {
        if (!p.benchmark().is_pareto_optimal(p.archive().fitness(i))) return false;
    }
    return true;
}

inline Paes make_engine(const Benchmark& b, MutationKind mutation, const Archiver& archiver, std::size_t L,
                        std::uint64_t seed) {
    return Paes(PaesOptions{b, mutation, archiver, L, seed, false});
}

/// Runs `p` for `budget` iterations in total.
inline void advance(Paes& p, std::uint64_t budget) {
    while (p.iteration() < budget) p.step();
}

inline std::vector<int> lo_vector(std::span<const int> f) {
    std::vector<int> lo;
    for (std::size_t i = 0; i < f.size(); i += 2) lo.push_back(f[i]);
    return lo;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Chains {(i, n-i) : a <= i <= b}: swept hv, closed form and cell count agree for every n in [from, n].
inline Report hv_formula(Params p) {
    const int n_max = p.num<int>("n", 20);
    const int n_min = p.num<int>("from", n_max);
    p.finish();
    if (n_min < 0 || n_min > n_max) throw ConfigError("hv-formula: need 0 <= from <= n");
    const ReferencePoint h = ReferencePoint::uniform(2);
    std::uint64_t checked = 0;
    nlohmann::json mismatches = nlohmann::json::array();
    for (int n = n_min; n <= n_max; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = a; b <= n; ++b) {
                std::vector<FitnessVector> chain;
                for (int i = a; i <= b; ++i) chain.push_back({i, n - i});
                const auto swept = hypervolume(chain, h);
                const auto formula = chain_hv_formula(n, a, b);
                const auto cells = oracle::brute_force_hypervolume(chain, h);
                ++checked;
                if (swept != formula || formula != cells) {
                    if (mismatches.size() < 10) {
                        mismatches.push_back({{"n", n}, {"a", a}, {"b", b}, {"sweep", swept}, {"formula", formula},
                                              {"cells", cells}});
                    }
                }
            }
        }
    }
    Report r{"hv-formula", mismatches.empty(), {}};
    r.evidence = {{"n_from", n_min}, {"n_to", n_max}, {"chains_checked", checked}, {"mismatches", mismatches}};
    return r;
}

/// W_t never decreases and a Pareto-optimal current solution stays Pareto-optimal (one-bit m-LOTZ).
inline Report monotone_w(Params p) {
    const int m = p.num<int>("m", 4);
    const int n = p.num<int>("n", 16);
    const auto steps = p.num<std::uint64_t>("steps", 100'000);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    const ArchiverKind kind = parse_archiver_kind(p.str("archiver", "aga"));
    p.finish();
    const Benchmark b = Benchmark::mlotz(m, n);
    const auto L = static_cast<std::size_t>(std::min<std::uint64_t>(b.front_size(), 100'000));
    Paes paes = detail::make_engine(b, MutationKind::OneBit, Archiver::with_defaults(kind, m, b.f_max(), L), L, seed);
    std::uint64_t decreases = 0;
    std::uint64_t left_front = 0;
    std::uint64_t over_n = 0;
    int w = paes.potential();
    const int w_start = w;
    bool pareto = paes.current_is_pareto_optimal();
    for (std::uint64_t t = 0; t < steps; ++t) {
        paes.step();
        const int next = paes.potential();
        if (next < w) ++decreases;
        if (next > n) ++over_n;
        const bool now = paes.current_is_pareto_optimal();
        if (pareto && !now) ++left_front;
        pareto = now;
        w = next;
    }
    Report r{"monotone-w", decreases == 0 && left_front == 0 && over_n == 0, {}};
    r.evidence = {{"m", m},           {"n", n},
                  {"steps", steps},   {"archive_size", L},
                  {"w_start", w_start}, {"w_final", w},
                  {"decreases", decreases}, {"left_front_after_reaching_it", left_front},
                  {"w_above_n", over_n}};
    return r;
}

/// Fuzz every benchmark x archiver x mutation with full invariant checks after each step.
inline Report incomparable_archive(Params p) {
    const int n = p.num<int>("n", 12);
    const auto steps = p.num<std::uint64_t>("steps", 100'000);
    const auto L = p.num<std::size_t>("archive_size", 5);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    p.finish();
    if (n % 2 != 0 || n < 4) throw ConfigError("incomparable-archive: n must be even and at least 4");
    const std::vector<Benchmark> benches{Benchmark::lotz(n), Benchmark::mlotz(4, n), Benchmark::omm(n),
                                         Benchmark::cocz(n)};
    std::uint64_t violations = 0;
    std::uint64_t total = 0;
    std::uint64_t archiver_calls = 0;
    nlohmann::json combos = nlohmann::json::array();
    std::uint64_t combo = 0;
    for (const auto& b : benches) {
        for (ArchiverKind kind : {ArchiverKind::None, ArchiverKind::Aga, ArchiverKind::Hva, ArchiverKind::Mga}) {
            for (MutationKind mut : {MutationKind::OneBit, MutationKind::StandardBit}) {
                Paes paes = detail::make_engine(b, mut, Archiver::with_defaults(kind, b.m(), b.f_max(), L), L,
                                                derive_seed(seed, static_cast<std::uint64_t>(n), combo++));
                std::uint64_t bad = 0;
                std::uint64_t consulted = 0;
                for (std::uint64_t t = 0; t < steps; ++t) {
                    const auto out = paes.step();
                    consulted += out.event == StepEvent::IncomparableArchiverAccepted ||
                                 out.event == StepEvent::IncomparableArchiverRejected;
                    const auto& a = paes.archive();
                    bool ok = true;
                    for (std::size_t i = 0; i < a.size() && ok; ++i) {
                        for (std::size_t j = 0; j < a.size() && ok; ++j) {
                            ok = i == j || !weakly_dominates(a.fitness(i), a.fitness(j));
                        }
                    }
                    try {
                        paes.check_state();
                    } catch (const std::logic_error&) {
                        ok = false;
                    }
                    if (!ok) ++bad;
                }
                violations += bad;
                total += steps;
                archiver_calls += consulted;
                combos.push_back({{"benchmark", b.name()}, {"m", b.m()}, {"archiver", to_string(kind)},
                                  {"mutation", to_string(mut)}, {"violations", bad}, {"archiver_calls", consulted}});
            }
        }
    }
    Report r{"incomparable-archive", violations == 0, {}};
    r.evidence = {{"n", n}, {"archive_size", L}, {"steps_total", total}, {"archiver_calls", archiver_calls},
                  {"violations", violations}, {"combinations", combos}};
    return r;
}

/// hv(A_t) never decreases on LOTZ when L is at least the largest antichain; strict where c beats a removed member.
inline Report hv_monotone(Params p) {
    const int n = p.num<int>("n", 16);
    const auto L = p.num<std::size_t>("archive_size", static_cast<std::size_t>(n) + 1);
    const auto steps = p.num<std::uint64_t>("steps", 100'000);
    const int seeds = p.num<int>("seeds", 20);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    const MutationKind mut = parse_mutation_kind(p.str("mutation", "standard-bit"));
    const ArchiverKind kind = parse_archiver_kind(p.str("archiver", "hva"));
    p.finish();
    const Benchmark b = Benchmark::lotz(n);
    const std::size_t antichain =
        n <= oracle::kMaxEnumerationBits ? oracle::max_antichain_size(b) : static_cast<std::size_t>(n) + 1;
    if (L < antichain) throw ConfigError("hv-monotone: archive_size is below the largest antichain");
    const ReferencePoint h = ReferencePoint::uniform(2);
    std::uint64_t decreases = 0;
    std::uint64_t strict_steps = 0;
    std::uint64_t strict_missed = 0;
    std::uint64_t changes = 0;
    for (int s = 0; s < seeds; ++s) {
        Paes paes = detail::make_engine(b, mut, Archiver::with_defaults(kind, 2, b.f_max(), L), L,
                                        derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)));
        std::int64_t hv = hypervolume(paes.archive().fitness_data(), 2, h);
        for (std::uint64_t t = 0; t < steps; ++t) {
            const auto out = paes.step();
            if (!accepted(out.event)) continue;
            ++changes;
            const std::int64_t next = hypervolume(paes.archive().fitness_data(), 2, h);
            if (next < hv) ++decreases;
            bool strict = false;
            for (std::size_t i = 0; i < out.removed_count; ++i) {
                strict = strict || strictly_dominates(out.candidate, out.removed.subspan(2 * i, 2));
            }
            if (strict) {
                ++strict_steps;
                if (next <= hv) ++strict_missed;
            }
            hv = next;
        }
    }
    Report r{"hv-monotone", decreases == 0 && strict_missed == 0, {}};
    r.evidence = {{"n", n},
                  {"archive_size", L},
                  {"oracle_antichain", antichain},
                  {"mutation", to_string(mut)},
                  {"seeds", seeds},
                  {"steps_per_seed", steps},
                  {"archive_changes", changes},
                  {"decreases", decreases},
                  {"strict_steps", strict_steps},
                  {"strict_missed", strict_missed}};
    return r;
}

/// Final AGA cell occupancy on the front obeys the two crowding properties.
inline Report aga_distribution(Params p) {
    const int m = p.num<int>("m", 2);
    const int n = p.num<int>("n", 32);
    const auto L = p.num<std::size_t>("archive_size", 17);
    const auto factor = p.num<std::uint64_t>("budget_factor", 10);
    const int seeds = p.num<int>("seeds", 5);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    p.finish();
    const Benchmark b = Benchmark::mlotz(m, n);
    if (L >= b.front_size()) throw ConfigError("aga-distribution: archive_size must be below the front size");
    const std::uint64_t budget = factor * default_budget(b, MutationKind::OneBit);
    const Archiver archiver = Archiver::with_defaults(ArchiverKind::Aga, m, b.f_max(), L);
    const AgaParams grid = archiver.aga_params();

    std::map<std::vector<int>, int> front_cells;
    for (const auto& v : b.pareto_front_fitness()) ++front_cells[aga_cell(v, grid)];

    bool pass = true;
    nlohmann::json runs = nlohmann::json::array();
    for (int s = 0; s < seeds; ++s) {
        Paes paes = detail::make_engine(b, MutationKind::OneBit, archiver, L,
                                        derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)));
        detail::advance(paes, budget);
        std::map<std::vector<int>, int> archive_cells;
        std::size_t off_front = 0;
        for (std::size_t i = 0; i < paes.archive().size(); ++i) {
            const auto f = paes.archive().fitness(i);
            if (b.is_pareto_optimal(f)) {
                ++archive_cells[aga_cell(f, grid)];
            } else {
                ++off_front;
            }
        }
        std::uint64_t broken1 = 0;
        std::uint64_t broken2 = 0;
        int max_k = 0;
        for (const auto& [cell, k] : archive_cells) {
            max_k = std::max(max_k, k);
            for (const auto& [other, front_count] : front_cells) {
                if (other == cell) continue;
                const auto it = archive_cells.find(other);
                const int held = it == archive_cells.end() ? 0 : it->second;
                if (front_count >= k && held < k - 1) ++broken1;
                if (front_count <= k - 1 && held != front_count) ++broken2;
            }
        }
        const bool ok = broken1 == 0 && broken2 == 0 && off_front == 0;
        pass = pass && ok;
        runs.push_back({{"seed_index", s}, {"archive", paes.archive().size()}, {"off_front", off_front},
                        {"max_cell_occupancy", max_k}, {"property1_violations", broken1},
                        {"property2_violations", broken2}});
    }
    Report r{"aga-distribution", pass, {}};
    r.evidence = {{"m", m}, {"n", n}, {"archive_size", L}, {"budget", budget}, {"grid_range", grid.grid_range},
                  {"bisections", grid.bisections}, {"front_cells", front_cells.size()}, {"runs", runs}};
    return r;
}

/// HVA on LOTZ ends with span L + ceil(L/2) - 2, ceil(L/2) - 1 non-adjacent holes and the hv lower bound.
inline Report hva_spread(Params p) {
    const int n = p.num<int>("n", 30);
    const int L = p.num<int>("archive_size", 12);
    const int seeds = p.num<int>("seeds", 20);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    const Benchmark b = Benchmark::lotz(n);
    const auto budget = p.num<std::uint64_t>("budget", default_budget(b, MutationKind::OneBit));
    p.finish();
    const int half = detail::ceil_half(L);
    if (L < 2 || L + half > n + 2) throw ConfigError("hva-spread: needs 2 <= L and L + ceil(L/2) <= n + 2");
    const int want_d = L + half - 2;
    const int want_holes = half - 1;
    // (L+c-1)(n+1-(L+c-2)/2) - c + 1 with c = ceil(L/2), kept exact by doubling.
    const std::int64_t bound2 = static_cast<std::int64_t>(L + half - 1) * (2 * (n + 1) - (L + half - 2)) -
                                2 * static_cast<std::int64_t>(half) + 2;
    const ReferencePoint h = ReferencePoint::uniform(2);

    struct Spread {
        int a = 0;
        int b = 0;
        int holes = 0;
        int adjacent = 0;
        bool on_front = true;
    };
    auto measure = [&](const Paes& paes) {
        std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
        Spread sp{n, 0, 0, 0, detail::all_pareto(paes)};
        for (std::size_t i = 0; i < paes.archive().size(); ++i) {
            const int lo = paes.archive().fitness(i)[0];
            present[static_cast<std::size_t>(lo)] = true;
            sp.a = std::min(sp.a, lo);
            sp.b = std::max(sp.b, lo);
        }
        for (int i = sp.a + 1; i < sp.b; ++i) {
            if (present[static_cast<std::size_t>(i)]) continue;
            ++sp.holes;
            if (i + 1 < sp.b && !present[static_cast<std::size_t>(i + 1)]) ++sp.adjacent;
        }
        return sp;
    };
    auto describe = [](const Spread& sp) {
        return nlohmann::json{{"a", sp.a},         {"b", sp.b},
                              {"d", sp.b - sp.a},  {"holes", sp.holes},
                              {"adjacent_holes", sp.adjacent}, {"on_front", sp.on_front}};
    };

    bool pass = true;
    nlohmann::json runs = nlohmann::json::array();
    for (int s = 0; s < seeds; ++s) {
        Paes paes = detail::make_engine(b, MutationKind::OneBit, Archiver::hva(h), static_cast<std::size_t>(L),
                                        derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)));
        // Also record the first full archive on the front whose span reaches the target, for diagnosis.
        nlohmann::json first = nullptr;
        while (paes.iteration() < budget) {
            const auto out = paes.step();
            if (first.is_null() && accepted(out.event) && paes.archive().full()) {
                const Spread sp = measure(paes);
                if (sp.on_front && sp.b - sp.a >= want_d) {
                    first = describe(sp);
                    first["t"] = paes.iteration();
                }
            }
        }
        const Spread fin = measure(paes);
        const std::int64_t hv = hypervolume(paes.archive().fitness_data(), 2, h);
        const bool ok = fin.on_front && static_cast<int>(paes.archive().size()) == L && fin.b - fin.a == want_d &&
                        fin.holes == want_holes && fin.adjacent == 0 && 2 * hv >= bound2;
        pass = pass && ok;
        nlohmann::json run = describe(fin);
        run["seed_index"] = s;
        run["archive"] = paes.archive().size();
        run["hv"] = hv;
        run["hv_bound_met"] = 2 * hv >= bound2;
        run["ok"] = ok;
        run["first_target_spread"] = first;
        runs.push_back(run);
    }
    Report r{"hva-spread", pass, {}};
    r.evidence = {{"n", n},           {"archive_size", L},    {"budget", budget}, {"expected_d", want_d},
                  {"expected_holes", want_holes}, {"hv_bound", static_cast<double>(bound2) / 2.0}, {"runs", runs}};
    return r;
}

/// Writes n + 1 = 2^k * l with l odd.
inline std::pair<int, int> split_power_of_two(int n_plus_1) {
    int k = 0;
    while (n_plus_1 % 2 == 0) {
        n_plus_1 /= 2;
        ++k;
    }
    return {k, n_plus_1};
}

/// Level at which MGA on LOTZ with n + 1 = 2^k l should separate L archive members.
inline int mga_expected_level(int n, int L) {
    const auto [k, ell] = split_power_of_two(n + 1);
    if (2 * L <= ell + 1) return k + 1;
    if (L <= ell) return k;
    for (int j = 1; j <= k; ++j) {
        if (L <= (1 << j) * ell) return k - j;
    }
    throw ConfigError("mga-levels: archive size exceeds n + 1");
}

/// MGA on LOTZ ends with pairwise incomparable box vectors at the predicted level.
inline Report mga_levels(Params p) {
    const int n = p.num<int>("n", 23);
    const std::vector<int> sizes = p.ints("archive_sizes", {2, 3, 4, 5, 6});
    const int seeds = p.num<int>("seeds", 10);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    const Benchmark b = Benchmark::lotz(n);
    const auto budget = p.num<std::uint64_t>("budget", default_budget(b, MutationKind::OneBit));
    p.finish();
    const auto [k, ell] = split_power_of_two(n + 1);
    bool pass = true;
    nlohmann::json groups = nlohmann::json::array();
    for (int L : sizes) {
        if (L < 2 || L > n) throw ConfigError("mga-levels: archive sizes must lie in 2..n");
        const int level = mga_expected_level(n, L);
        int failures = 0;
        nlohmann::json finals = nlohmann::json::array();
        for (int s = 0; s < seeds; ++s) {
            Paes paes = detail::make_engine(
                b, MutationKind::OneBit, Archiver::mga(), static_cast<std::size_t>(L),
                derive_seed(seed, static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(L),
                            static_cast<std::uint64_t>(s)));
            detail::advance(paes, budget);
            const auto& a = paes.archive();
            bool ok = detail::all_pareto(paes) && static_cast<int>(a.size()) == L;
            nlohmann::json boxes = nlohmann::json::array();
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto bi = mga_box(a.fitness(i), level);
                boxes.push_back(bi);
                for (std::size_t j = i + 1; j < a.size(); ++j) {
                    ok = ok && compare(bi, mga_box(a.fitness(j), level)) == Dominance::Incomparable;
                }
            }
            if (!ok) ++failures;
            finals.push_back({{"seed_index", s}, {"ok", ok}, {"boxes", boxes}});
        }
        pass = pass && failures == 0;
        groups.push_back({{"archive_size", L}, {"level", level}, {"failures", failures}, {"runs", finals}});
    }
    Report r{"mga-levels", pass, {}};
    r.evidence = {{"n", n}, {"k", k}, {"l", ell}, {"budget", budget}, {"groups", groups}};
    return r;
}

/// Bracket [(2n/m+1)^(m-1) / (4 (m-2)^(m/2-1)), (2n/m+1)^(m-1)] for m >= 4; exactly n + 1 for m = 2.
inline std::pair<double, double> antichain_bracket(int m, int n) {
    const double base = 2.0 * n / m + 1.0;
    const double upper = std::pow(base, m - 1);
    if (m == 2) return {static_cast<double>(n) + 1, static_cast<double>(n) + 1};
    return {upper / (4.0 * std::pow(m - 2.0, m / 2.0 - 1.0)), upper};
}

/// Exact maximum antichains of m-LOTZ against the bracket.
inline Report antichain_bounds(Params p) {
    std::vector<std::pair<int, int>> cases;
    if (p.has("m") || p.has("n")) {
        const int m = p.num<int>("m", 2);
        for (int n : p.ints("n", {8})) cases.emplace_back(m, n);
    } else {
        for (int n = 2; n <= 16; ++n) cases.emplace_back(2, n);
        for (int n : {4, 8, 12}) cases.emplace_back(4, n);
    }
    p.finish();
    bool pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (auto [m, n] : cases) {
        const std::size_t size = oracle::max_antichain_size(Benchmark::mlotz(m, n));
        const auto [lo, hi] = antichain_bracket(m, n);
        const auto v = static_cast<double>(size);
        const bool ok = v >= lo && v <= hi;
        pass = pass && ok;
        rows.push_back({{"m", m}, {"n", n}, {"max_antichain", size}, {"lower", lo}, {"upper", hi}, {"ok", ok}});
    }
    Report r{"antichain-bounds", pass, {}};
    r.evidence = {{"cases", rows}};
    return r;
}

/// Closed-form fronts, front_index and is_pareto_optimal against 2^n enumeration.
inline Report front_oracle(Params p) {
    const int n_max = p.num<int>("n", 12);
    p.finish();
    if (n_max > 16) throw ConfigError("front-oracle: n is capped at 16");
    std::vector<Benchmark> cases;
    for (int n = 2; n <= n_max; ++n) cases.push_back(Benchmark::lotz(n));
    for (int n = 4; n <= n_max; n += 2) cases.push_back(Benchmark::mlotz(4, n));
    for (int n = 6; n <= n_max; n += 3) cases.push_back(Benchmark::mlotz(6, n));
    for (int n = 1; n <= n_max; ++n) cases.push_back(Benchmark::omm(n));
    for (int n = 2; n <= n_max; n += 2) cases.push_back(Benchmark::cocz(n));
    bool pass = true;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& b : cases) {
        const auto brute = oracle::brute_force_front(b);
        auto closed = b.pareto_front_fitness();
        std::vector<FitnessVector> sorted = closed;
        std::sort(sorted.begin(), sorted.end());
        bool ok = sorted == brute && closed.size() == b.front_size();
        for (std::size_t i = 0; i < closed.size() && ok; ++i) ok = b.front_index(closed[i]) == i;
        const std::set<FitnessVector> front(brute.begin(), brute.end());
        for (const auto& v : oracle::attainable_fitness(b)) {
            ok = ok && b.is_pareto_optimal(v) == (front.count(v) != 0);
        }
        if (!ok) failures.push_back({{"benchmark", b.name()}, {"m", b.m()}, {"n", b.n()}});
        pass = pass && ok;
    }
    Report r{"front-oracle", pass, {}};
    r.evidence = {{"instances", cases.size()}, {"failures", failures}};
    return r;
}

/**
 * @brief Exact part: from every front genotype of m-LOTZ, the n one-bit
 * candidates fed through the engine move the LO vector exactly like the lazy
 * grid walk. Statistical part: PAES cover time of the front from a random
 * front start against the lazy walk from the same start.
 */
inline Report walk_equivalence(Params p) {
    const int exact_n = p.num<int>("exact_n", 12);
    const int n = p.num<int>("n", 32);
    const int reps = p.num<int>("reps", 200);
    const auto seed = p.num<std::uint64_t>("seed", 1);
    const double tolerance = p.num<double>("tolerance", 0.10);
    const bool statistical = p.num<int>("statistical", 1) != 0;
    p.finish();

    std::uint64_t states = 0;
    std::uint64_t mismatched = 0;
    nlohmann::json exact = nlohmann::json::array();
    for (int m : {2, 4}) {
        for (int nn = m; nn <= exact_n; nn += m / 2) {
            const Benchmark b = Benchmark::mlotz(m, nn);
            oracle::GridWalkConfig cfg;
            cfg.dims = m / 2;
            cfg.axis_nodes = b.block_length() + 1;
            cfg.mode = oracle::WalkMode::Lazy;
            cfg.lazy_n = nn;
            const auto L = static_cast<std::size_t>(b.front_size());
            std::uint64_t bad = 0;
            for (const auto& v : b.pareto_front_fitness()) {
                const Bitstring s = b.front_genotype(v);
                const std::vector<int> from = detail::lo_vector(v);
                oracle::StepLaw law;
                law.denominator = nn;
                for (int i = 0; i < nn; ++i) {
                    Paes engine(PaesOptions{b, MutationKind::OneBit, Archiver::none(), L, 0, false}, s, {});
                    Bitstring c = s;
                    c.flip(static_cast<std::size_t>(i));
                    engine.step_with(c);
                    const std::vector<int> to = detail::lo_vector(engine.current_fitness());
                    std::vector<int> delta(from.size());
                    bool moved = false;
                    for (std::size_t d = 0; d < from.size(); ++d) {
                        delta[d] = to[d] - from[d];
                        moved = moved || delta[d] != 0;
                    }
                    if (moved) {
                        law.moves[delta] += 1;
                    } else {
                        law.stay += 1;
                    }
                }
                ++states;
                if (!(law == oracle::lazy_step_law(cfg, from))) ++bad;
            }
            mismatched += bad;
            exact.push_back({{"m", m}, {"n", nn}, {"front_states", b.front_size()}, {"mismatches", bad}});
        }
    }
    bool pass = mismatched == 0;

    nlohmann::json stat = nullptr;
    if (statistical) {
        const Benchmark b = Benchmark::lotz(n);
        Rng starts(seed);
        double paes_sum = 0;
        double walk_sum = 0;
        std::uint64_t capped = 0;
        const std::uint64_t cap = 100 * default_budget(b, MutationKind::OneBit);
        for (int r = 0; r < reps; ++r) {
            const int start = static_cast<int>(uniform_index(starts, static_cast<std::size_t>(n) + 1));
            const FitnessVector v{start, n - start};
            Paes engine(PaesOptions{b, MutationKind::OneBit, Archiver::none(), static_cast<std::size_t>(n) + 1,
                                    derive_seed(seed, 1, static_cast<std::uint64_t>(r)), false},
                        b.front_genotype(v), {});
            while (!engine.archive_is_front() && engine.iteration() < cap) engine.step();
            if (!engine.archive_is_front()) ++capped;
            paes_sum += static_cast<double>(engine.iteration());

            oracle::GridWalkConfig cfg;
            cfg.dims = 1;
            cfg.axis_nodes = n + 1;
            cfg.mode = oracle::WalkMode::Lazy;
            cfg.lazy_n = n;
            cfg.start = {start};
            Rng walk_rng(derive_seed(seed, 2, static_cast<std::uint64_t>(r)));
            walk_sum += static_cast<double>(oracle::cover_time(cfg, walk_rng));
        }
        const double paes_mean = paes_sum / reps;
        const double walk_mean = walk_sum / reps;
        const double rel = std::abs(paes_mean - walk_mean) / walk_mean;
        const bool ok = capped == 0 && rel <= tolerance;
        pass = pass && ok;
        stat = {{"n", n},           {"reps", reps}, {"paes_mean", paes_mean}, {"walk_mean", walk_mean},
                {"relative_gap", rel}, {"tolerance", tolerance}, {"capped", capped}, {"ok", ok}};
    }
    Report r{"walk-equivalence", pass, {}};
    r.evidence = {{"exact_states", states}, {"exact_mismatches", mismatched}, {"exact", exact}, {"statistical", stat}};
    return r;
}

// ---------------------------------------------------------------------------

using Suite = std::function<Report(Params)>;

inline const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table{
        {"hv-formula", hv_formula},
        {"monotone-w", monotone_w},
        {"incomparable-archive", incomparable_archive},
        {"hv-monotone", hv_monotone},
        {"aga-distribution", aga_distribution},
        {"hva-spread", hva_spread},
        {"mga-levels", mga_levels},
        {"antichain-bounds", antichain_bounds},
        {"front-oracle", front_oracle},
        {"walk-equivalence", walk_equivalence},
    };
    return table;
}

/// Unknown names raise ConfigError (a usage error at the CLI).
inline Report run_suite(const std::string& name, Params params) {
    const auto& table = suites();
    const auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown suite '" + name + "'");
    return it->second(std::move(params));
}

}  // namespace paes25::verify
