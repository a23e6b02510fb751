/**
 * @file harness.hpp
 * @brief Single runs with stop rules, seeded sweeps written as CSV, and
 * log-log scaling fits over sweep output.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "archivers.hpp"
#include "benchmarks.hpp"
#include "core.hpp"
#include "hypervolume.hpp"
#include "mutation.hpp"
#include "paes.hpp"
#include "rng.hpp"

namespace paes25 {

enum class StopRule { FullFront, Coverage, Budget };

inline std::string to_string(StopRule r, double target = 1.0) {
    switch (r) {
        case StopRule::FullFront: return "full-front";
        case StopRule::Budget: return "budget";
        case StopRule::Coverage: {
            std::ostringstream os;
            os << "coverage:" << target;
            return os.str();
        }
    }
    return "?";
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(what) + ": cannot parse '" + s + "' as a number");
    }
    return value;
}

// from_chars for double is missing from older libstdc++.
template <>
inline double parse_number<double>(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (s.empty() || used != s.size()) throw ConfigError(std::string(what) + ": cannot parse '" + s + "' as a number");
    return value;
}

}  // namespace detail

inline std::pair<StopRule, double> parse_stop_rule(std::string_view text) {
    if (text == "full-front") return {StopRule::FullFront, 1.0};
    if (text == "budget") return {StopRule::Budget, 1.0};
    if (text.starts_with("coverage:")) {
        const double target = detail::parse_number<double>(text.substr(9), "stop");
        if (!(target > 0.0 && target <= 1.0)) throw ConfigError("stop: coverage target must be in (0, 1]");
        return {StopRule::Coverage, target};
    }
    throw ConfigError("unknown stop rule '" + std::string(text) + "' (expected full-front|budget|coverage:X)");
}

/**
 * @brief Iteration budget used when none is given.
 *
 * One-bit m-LOTZ: 50 n^3 (m=2), 50 n^3 ln^2 n (m=4), 50 n V ln V for larger
 * m with V the front size. Standard-bit m-LOTZ: 20 n^4. OMM/COCZ: 10^6.
 */
inline std::uint64_t default_budget(const Benchmark& b, MutationKind mutation) {
    if (b.kind() != BenchmarkKind::MLotz) return 1'000'000;
    const double n = b.n();
    double budget = 0;
    if (mutation == MutationKind::StandardBit) {
        budget = 20.0 * n * n * n * n;
    } else if (b.m() == 2) {
        budget = 50.0 * n * n * n;
    } else if (b.m() == 4) {
        budget = 50.0 * n * n * n * std::log(n) * std::log(n);
    } else {
        const double v = static_cast<double>(b.front_size());
        budget = 50.0 * n * v * std::log(v);
    }
    return static_cast<std::uint64_t>(std::max(1.0, std::ceil(budget)));
}

struct RunConfig {
    BenchmarkKind benchmark = BenchmarkKind::MLotz;
    int m = 2;
    int n = 16;
    MutationKind mutation = MutationKind::OneBit;
    ArchiverKind archiver = ArchiverKind::Aga;
    std::optional<int> aga_range;
    std::optional<int> aga_bisections;
    std::optional<std::vector<int>> hv_reference;
    std::size_t archive_size = 1;
    std::uint64_t seed = 0;
    /// nullopt selects default_budget().
    std::optional<std::uint64_t> budget;
    StopRule stop = StopRule::FullFront;
    double coverage_target = 1.0;
    /// Line-delimited JSON, one object per state change (or per step with trace_every_step).
    std::ostream* trace = nullptr;
    bool trace_every_step = false;
    bool check_invariants = PAES25_CHECK_INVARIANTS != 0;

    Benchmark make_benchmark() const { return {benchmark, m, n}; }

    Archiver make_archiver() const {
        const Benchmark b = make_benchmark();
        switch (archiver) {
            case ArchiverKind::Aga: {
                const AgaParams d = AgaParams::defaults(b.f_max(), archive_size, static_cast<std::size_t>(m));
                return Archiver::aga(AgaParams(aga_range.value_or(d.grid_range), aga_bisections.value_or(d.bisections)));
            }
            case ArchiverKind::Hva:
                if (hv_reference) {
                    if (hv_reference->size() != static_cast<std::size_t>(m)) {
                        throw ConfigError("hv reference point needs m components");
                    }
                    return Archiver::hva(ReferencePoint(*hv_reference));
                }
                return Archiver::hva(ReferencePoint::uniform(static_cast<std::size_t>(m)));
            default: return Archiver::with_defaults(archiver, m, b.f_max(), archive_size);
        }
    }

    std::uint64_t resolved_budget() const {
        if (budget) return *budget;
        return default_budget(make_benchmark(), mutation);
    }

    void validate() const {
        (void)make_benchmark();
        if (archive_size < 1) throw ConfigError("archive size must be at least 1");
        if (budget && *budget == 0) throw ConfigError("budget must be at least 1");
        if (stop == StopRule::Coverage && !(coverage_target > 0.0 && coverage_target <= 1.0)) {
            throw ConfigError("coverage target must be in (0, 1]");
        }
        (void)make_archiver();
    }
};

struct RunRecord {
    RunConfig config;  ///< echo; trace is cleared
    std::uint64_t budget = 0;
    std::uint64_t iterations = 0;
    std::optional<std::uint64_t> iterations_to_first_pareto;
    std::optional<std::uint64_t> iterations_to_full_front;
    /// The stop rule was not met within the budget; always false for StopRule::Budget.
    bool censored = false;
    double coverage_fraction = 0;
    double hv_fraction = 0;
    std::size_t archive_final = 0;
    int potential_final = 0;
    double wall_seconds = 0;
};

inline nlohmann::json to_json(const RunRecord& r) {
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    return {
        {"benchmark", to_string(r.config.benchmark)},
        {"m", r.config.m},
        {"n", r.config.n},
        {"mutation", to_string(r.config.mutation)},
        {"archiver", to_string(r.config.archiver)},
        {"archive_size", r.config.archive_size},
        {"seed", r.config.seed},
        {"budget", r.budget},
        {"stop", to_string(r.config.stop, r.config.coverage_target)},
        {"iterations", r.iterations},
        {"first_pareto", opt(r.iterations_to_first_pareto)},
        {"full_front", opt(r.iterations_to_full_front)},
        {"censored", r.censored},
        {"coverage", r.coverage_fraction},
        {"hv_fraction", r.hv_fraction},
        {"archive_final", r.archive_final},
        {"w_final", r.potential_final},
        {"wall_seconds", r.wall_seconds},
    };
}

namespace detail {

/// hv of the full front w.r.t. (-1,...,-1), memoised per benchmark.
inline std::int64_t front_hypervolume(const Benchmark& b) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::int64_t> cache;
    const auto key = std::make_tuple(static_cast<int>(b.kind()), b.m(), b.n());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const auto front = b.pareto_front_fitness();
    const std::int64_t hv = hypervolume(front, ReferencePoint::uniform(static_cast<std::size_t>(b.m())));
    std::lock_guard lock(mutex);
    cache.emplace(key, hv);
    return hv;
}

inline std::int64_t archive_hypervolume(const Archive& a) {
    return hypervolume(a.fitness_data(), a.objectives(), ReferencePoint::uniform(a.objectives()));
}

inline void write_trace(std::ostream& out, const Paes& p, std::string_view event, std::span<const int> candidate) {
    const double coverage =
        static_cast<double>(p.pareto_members()) / static_cast<double>(p.benchmark().front_size());
    nlohmann::json line = {
        {"t", p.iteration()},
        {"event", event},
        {"candidate", std::vector<int>(candidate.begin(), candidate.end())},
        {"archive_size", p.archive().size()},
        {"w", p.potential()},
        {"coverage", coverage},
        {"hv", archive_hypervolume(p.archive())},
    };
    out << line.dump() << '\n';
}

}  // namespace detail

/// Runs PAES-25 until the stop rule holds or the budget is spent.
inline RunRecord run(const RunConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    RunRecord rec;
    rec.config = config;
    rec.config.trace = nullptr;
    rec.budget = config.resolved_budget();

    PaesOptions options{config.make_benchmark(), config.mutation, config.make_archiver(), config.archive_size,
                        config.seed, config.check_invariants};
    Paes paes(std::move(options));
    const std::uint64_t front = paes.benchmark().front_size();

    auto reached = [&] {
        switch (config.stop) {
            case StopRule::FullFront: return rec.iterations_to_full_front.has_value();
            case StopRule::Coverage:
                return static_cast<double>(paes.pareto_members()) >=
                       config.coverage_target * static_cast<double>(front) - 1e-9;
            case StopRule::Budget: return false;
        }
        return false;
    };
    auto observe = [&] {
        if (!rec.iterations_to_first_pareto && paes.current_is_pareto_optimal()) {
            rec.iterations_to_first_pareto = paes.iteration();
        }
        if (!rec.iterations_to_full_front && paes.archive_is_front()) rec.iterations_to_full_front = paes.iteration();
    };

    if (config.trace) detail::write_trace(*config.trace, paes, "init", paes.current_fitness());
    observe();
    bool done = reached();
    while (!done && paes.iteration() < rec.budget) {
        const StepOutcome out = paes.step();
        if (config.trace && (config.trace_every_step || accepted(out.event))) {
            detail::write_trace(*config.trace, paes, to_string(out.event), out.candidate);
        }
        observe();
        done = reached();
    }

    rec.iterations = paes.iteration();
    rec.censored = config.stop != StopRule::Budget && !done;
    rec.coverage_fraction = static_cast<double>(paes.pareto_members()) / static_cast<double>(front);
    rec.archive_final = paes.archive().size();
    rec.potential_final = paes.potential();
    if (paes.archive_is_front()) {
        rec.hv_fraction = 1.0;
    } else {
        rec.hv_fraction = static_cast<double>(detail::archive_hypervolume(paes.archive())) /
                          static_cast<double>(detail::front_hypervolume(paes.benchmark()));
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
}

// ---------------------------------------------------------------------------
// Sweeps

/// Archive size as a function of n: a constant, the front size, n+1 or n/2+1.
struct ArchiveSizeRule {
    enum class Kind { Fixed, Front, NPlusOne, HalfNPlusOne } kind = Kind::Front;
    std::size_t fixed = 1;

    static ArchiveSizeRule parse(std::string_view text) {
        if (text == "front") return {Kind::Front, 0};
        if (text == "n+1") return {Kind::NPlusOne, 0};
        if (text == "n/2+1") return {Kind::HalfNPlusOne, 0};
        const auto v = detail::parse_number<std::size_t>(text, "archive_size");
        if (v < 1) throw ConfigError("archive_size must be at least 1");
        return {Kind::Fixed, v};
    }

    std::size_t resolve(const Benchmark& b) const {
        switch (kind) {
            case Kind::Fixed: return fixed;
            case Kind::Front: return static_cast<std::size_t>(b.front_size());
            case Kind::NPlusOne: return static_cast<std::size_t>(b.n()) + 1;
            case Kind::HalfNPlusOne: return static_cast<std::size_t>(b.n()) / 2 + 1;
        }
        return fixed;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Fixed: return std::to_string(fixed);
            case Kind::Front: return "front";
            case Kind::NPlusOne: return "n+1";
            case Kind::HalfNPlusOne: return "n/2+1";
        }
        return "?";
    }
};

/**
 * @brief Grid of runs over n values and replicates.
 *
 * Replicate i at size n is seeded with derive_seed(base_seed, n, i), so the
 * table does not depend on the thread count.
 */
struct SweepSpec {
    RunConfig base;  ///< n, archive_size, seed and budget are set per row
    std::vector<int> n_values;
    int replicates = 1;
    std::uint64_t base_seed = 0;
    ArchiveSizeRule archive_size;
    std::optional<std::uint64_t> budget;
    std::string output;
    unsigned threads = 0;  ///< 0 means hardware concurrency
    bool wall_time = false;

    void validate() const {
        if (n_values.empty()) throw ConfigError("sweep: n must list at least one value");
        if (replicates < 1) throw ConfigError("sweep: replicates must be at least 1");
        if (budget && *budget == 0) throw ConfigError("sweep: budget must be at least 1");
        for (int n : n_values) row_config(n, 0).validate();
    }

    RunConfig row_config(int n, int replicate) const {
        RunConfig c = base;
        c.n = n;
        c.archive_size = archive_size.resolve(c.make_benchmark());
        c.seed = derive_seed(base_seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(replicate));
        c.budget = budget;
        c.trace = nullptr;
        return c;
    }
};

/**
 * @brief Reads the flat key=value sweep format.
 *
 * Keys: benchmark, m, n (comma list), replicates, seed, mutation, archiver,
 * archive_size (int|front|n+1|n/2+1), budget (int|default), stop
 * (full-front|budget|coverage:X), aga_range, aga_bisections, hv_reference
 * (comma list), threads, output, wall_time, check_invariants. '#' starts a
 * comment.
 */
inline SweepSpec parse_sweep_config(std::istream& in) {
    SweepSpec spec;
    std::string line;
    int line_no = 0;
    std::map<std::string, std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::string text = detail::trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("sweep config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = detail::trim(std::string_view(text).substr(0, eq));
        const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
        if (!seen.emplace(key, value).second) throw ConfigError("sweep config: duplicate key '" + key + "'");
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = seen.find(key);
        if (it == seen.end()) return std::nullopt;
        std::string v = it->second;
        seen.erase(it);
        return v;
    };

    if (auto v = take("benchmark")) spec.base.benchmark = parse_benchmark_kind(*v);
    if (auto v = take("m")) spec.base.m = detail::parse_number<int>(*v, "m");
    if (auto v = take("n")) {
        for (const auto& part : detail::split(*v, ',')) spec.n_values.push_back(detail::parse_number<int>(part, "n"));
    }
    if (auto v = take("replicates")) spec.replicates = detail::parse_number<int>(*v, "replicates");
    if (auto v = take("seed")) spec.base_seed = detail::parse_number<std::uint64_t>(*v, "seed");
    if (auto v = take("mutation")) spec.base.mutation = parse_mutation_kind(*v);
    if (auto v = take("archiver")) spec.base.archiver = parse_archiver_kind(*v);
    if (auto v = take("archive_size")) spec.archive_size = ArchiveSizeRule::parse(*v);
    if (auto v = take("budget"); v && *v != "default") spec.budget = detail::parse_number<std::uint64_t>(*v, "budget");
    if (auto v = take("stop")) std::tie(spec.base.stop, spec.base.coverage_target) = parse_stop_rule(*v);
    if (auto v = take("aga_range")) spec.base.aga_range = detail::parse_number<int>(*v, "aga_range");
    if (auto v = take("aga_bisections")) spec.base.aga_bisections = detail::parse_number<int>(*v, "aga_bisections");
    if (auto v = take("hv_reference")) {
        std::vector<int> h;
        for (const auto& part : detail::split(*v, ',')) h.push_back(detail::parse_number<int>(part, "hv_reference"));
        spec.base.hv_reference = h;
    }
    if (auto v = take("threads")) spec.threads = detail::parse_number<unsigned>(*v, "threads");
    if (auto v = take("output")) spec.output = *v;
    if (auto v = take("wall_time")) spec.wall_time = *v == "true" || *v == "1";
    if (auto v = take("check_invariants")) spec.base.check_invariants = *v == "true" || *v == "1";
    if (!seen.empty()) throw ConfigError("sweep config: unknown key '" + seen.begin()->first + "'");
    spec.validate();
    return spec;
}

inline SweepSpec load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep config '" + path + "'");
    return parse_sweep_config(in);
}

struct SweepRow {
    int n = 0;
    int replicate = 0;
    RunRecord record;
    std::string error;
};

inline constexpr std::string_view kSweepColumns =
    "benchmark,m,n,mutation,archiver,archive_size,replicate,seed,budget,iterations,first_pareto,full_front,"
    "censored,coverage,hv_fraction,archive_final,error";

inline void write_csv_header(std::ostream& out, bool wall_time) {
    out << kSweepColumns << (wall_time ? ",wall_seconds" : "") << '\n';
}

inline void write_csv_row(std::ostream& out, const SweepRow& row, bool wall_time) {
    const RunRecord& r = row.record;
    const RunConfig& c = r.config;
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string err = row.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    std::ostringstream line;
    line << std::setprecision(10);
    line << to_string(c.benchmark) << ',' << c.m << ',' << row.n << ',' << to_string(c.mutation) << ','
         << to_string(c.archiver) << ',' << c.archive_size << ',' << row.replicate << ',' << c.seed << ',' << r.budget
         << ',' << r.iterations << ',' << opt(r.iterations_to_first_pareto) << ','
         << opt(r.iterations_to_full_front) << ',' << (r.censored ? 1 : 0) << ',' << r.coverage_fraction << ','
         << r.hv_fraction << ',' << r.archive_final << ',' << err;
    if (wall_time) line << ',' << r.wall_seconds;
    out << line.str() << '\n';
}

/**
 * @brief Runs every (n, replicate) pair on a worker pool and streams rows to
 * `out` in (n, replicate) order as soon as each prefix is complete.
 */
inline std::vector<SweepRow> sweep(const SweepSpec& spec, std::ostream* out = nullptr) {
    spec.validate();
    std::vector<SweepRow> rows;
    for (int n : spec.n_values) {
        for (int i = 0; i < spec.replicates; ++i) rows.push_back({n, i, {}, {}});
    }
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(spec.threads ? spec.threads : hw, rows.size()));

    std::mutex mutex;
    std::condition_variable ready;
    std::vector<bool> done(rows.size(), false);
    std::atomic<std::size_t> next{0};

    auto run_row = [&](std::size_t i) {
        SweepRow& row = rows[i];
        const RunConfig cfg = spec.row_config(row.n, row.replicate);
        try {
            row.record = run(cfg);
        } catch (const std::exception& e) {
            row.record.config = cfg;
            row.error = e.what();
        }
    };
    auto emit = [&](std::size_t i) {
        if (!out) return;
        write_csv_row(*out, rows[i], spec.wall_time);
        out->flush();
    };

    if (out) write_csv_header(*out, spec.wall_time);
    if (workers <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            run_row(i);
            emit(i);
        }
        return rows;
    }

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            run_row(i);
            {
                std::lock_guard lock(mutex);
                done[i] = true;
            }
            ready.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return done[i]; });
        }
        emit(i);
    }
    for (auto& t : pool) t.join();
    return rows;
}

// ---------------------------------------------------------------------------
// Scaling fits

/// The fields of a sweep CSV row that fitting needs.
struct CsvRecord {
    int n = 0;
    std::optional<std::uint64_t> first_pareto;
    std::optional<std::uint64_t> full_front;
    bool censored = false;
};

inline std::vector<CsvRecord> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("sweep csv: empty input");
    const auto header = detail::split(line, ',');
    auto column = [&](std::string_view name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw ConfigError("sweep csv: missing column '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t c_n = column("n");
    const std::size_t c_first = column("first_pareto");
    const std::size_t c_full = column("full_front");
    const std::size_t c_cens = column("censored");
    std::vector<CsvRecord> rows;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        const auto f = detail::split(line, ',');
        if (f.size() < header.size()) throw ConfigError("sweep csv: short row '" + line + "'");
        CsvRecord r;
        r.n = detail::parse_number<int>(f[c_n], "n");
        if (!f[c_first].empty()) r.first_pareto = detail::parse_number<std::uint64_t>(f[c_first], "first_pareto");
        if (!f[c_full].empty()) r.full_front = detail::parse_number<std::uint64_t>(f[c_full], "full_front");
        r.censored = f[c_cens] == "1";
        rows.push_back(r);
    }
    return rows;
}

inline std::vector<CsvRecord> to_csv_records(std::span<const SweepRow> rows) {
    std::vector<CsvRecord> out;
    for (const auto& r : rows) {
        out.push_back({r.n, r.record.iterations_to_first_pareto, r.record.iterations_to_full_front,
                       r.record.censored || !r.error.empty()});
    }
    return out;
}

/// Reference growth g(n) for the ratio table.
class GrowthModel {
public:
    enum class Kind { N2, N3, N3Log2, Grid, N4 };

    static GrowthModel parse(std::string_view text) {
        if (text == "n2") return GrowthModel(Kind::N2);
        if (text == "n3") return GrowthModel(Kind::N3);
        if (text == "n3log2") return GrowthModel(Kind::N3Log2);
        if (text == "n4") return GrowthModel(Kind::N4);
        if (text.starts_with("grid(") && text.ends_with(")")) {
            GrowthModel g(Kind::Grid);
            g.m_ = detail::parse_number<int>(text.substr(5, text.size() - 6), "grid(m)");
            if (g.m_ < 2 || g.m_ % 2 != 0) throw ConfigError("grid(m): m must be even and at least 2");
            return g;
        }
        throw ConfigError("unknown model '" + std::string(text) + "' (expected n2|n3|n3log2|grid(m)|n4)");
    }

    static GrowthModel grid(int m) { return parse("grid(" + std::to_string(m) + ")"); }

    /// n^2, n^3, n^3 ln^2 n, n (2n/m)^(m/2) ln(n/m), or n^4.
    double operator()(double n) const {
        switch (kind_) {
            case Kind::N2: return n * n;
            case Kind::N3: return n * n * n;
            case Kind::N3Log2: return n * n * n * std::log(n) * std::log(n);
            case Kind::Grid: return n * std::pow(2.0 * n / m_, m_ / 2.0) * std::log(n / m_);
            case Kind::N4: return n * n * n * n;
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::N2: return "n2";
            case Kind::N3: return "n3";
            case Kind::N3Log2: return "n3log2";
            case Kind::Grid: return "grid(" + std::to_string(m_) + ")";
            case Kind::N4: return "n4";
        }
        return "?";
    }

private:
    explicit GrowthModel(Kind k) : kind_(k) {}
    Kind kind_;
    int m_ = 2;
};

enum class FitMetric { FullFront, FirstPareto };

struct RatioRow {
    int n = 0;
    std::size_t runs = 0;
    std::size_t used = 0;
    double mean = 0;
    double model = 0;
    double ratio = 0;
};

struct FitResult {
    double slope = 0;
    double intercept = 0;
    std::vector<RatioRow> table;
    std::vector<std::string> warnings;

    /// max ratio / min ratio over the table.
    double ratio_spread() const {
        if (table.empty()) return 0;
        const auto [lo, hi] = std::minmax_element(table.begin(), table.end(),
                                                  [](const RatioRow& a, const RatioRow& b) { return a.ratio < b.ratio; });
        return hi->ratio / lo->ratio;
    }
};

/**
 * @brief Least-squares line through (log n, log mean T) plus the ratio table
 * mean T(n) / g(n). Censored runs are left out of the means with a warning;
 * an n with no usable runs is dropped.
 */
inline FitResult fit_scaling(std::span<const CsvRecord> rows, const GrowthModel& model,
                             FitMetric metric = FitMetric::FullFront) {
    std::map<int, std::pair<std::size_t, std::vector<double>>> by_n;
    for (const auto& r : rows) {
        auto& [runs, values] = by_n[r.n];
        ++runs;
        const auto& v = metric == FitMetric::FullFront ? r.full_front : r.first_pareto;
        const bool usable = v.has_value() && (metric == FitMetric::FirstPareto || !r.censored);
        if (usable) values.push_back(static_cast<double>(*v));
    }
    FitResult fit;
    for (const auto& [n, entry] : by_n) {
        const auto& [runs, values] = entry;
        if (values.empty()) {
            fit.warnings.push_back("n=" + std::to_string(n) + ": all runs censored, excluded");
            continue;
        }
        if (values.size() < runs) {
            fit.warnings.push_back("n=" + std::to_string(n) + ": " + std::to_string(runs - values.size()) + " of " +
                                   std::to_string(runs) + " runs censored, mean over the rest");
        }
        RatioRow row;
        row.n = n;
        row.runs = runs;
        row.used = values.size();
        for (double v : values) row.mean += v;
        row.mean /= static_cast<double>(values.size());
        row.model = model(n);
        row.ratio = row.mean / row.model;
        fit.table.push_back(row);
    }
    if (fit.table.size() < 3) throw ConfigError("fit: need at least 3 distinct n with uncensored runs");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : fit.table) {
        if (r.mean <= 0) throw RangeError("fit: mean must be positive to take logs");
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(r.mean);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(fit.table.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0) throw ConfigError("fit: n values must differ");
    fit.slope = (k * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

}  // namespace paes25
