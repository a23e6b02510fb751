#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "paes25/harness.hpp"

using namespace paes25;

namespace {

RunConfig small_lotz(int n, std::uint64_t seed) {
    RunConfig c;
    c.n = n;
    c.archive_size = static_cast<std::size_t>(n) + 1;
    c.seed = seed;
    return c;
}

SweepSpec small_sweep() {
    SweepSpec s;
    s.base.m = 2;
    s.n_values = {6, 8};
    s.replicates = 3;
    s.base_seed = 42;
    s.archive_size = ArchiveSizeRule::parse("n+1");
    s.threads = 1;
    return s;
}

std::string csv_of(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_csv_header(out, false);
    for (const auto& r : rows) write_csv_row(out, r, false);
    return out.str();
}

std::vector<CsvRecord> synthetic(const std::function<double(double)>& t) {
    std::vector<CsvRecord> rows;
    for (int n : {10, 20, 40, 80}) {
        for (int r = 0; r < 3; ++r) {
            CsvRecord c;
            c.n = n;
            c.full_front = static_cast<std::uint64_t>(std::llround(t(n)));
            c.first_pareto = c.full_front;
            rows.push_back(c);
        }
    }
    return rows;
}

}  // namespace

TEST(Run, TinyLotzEndsOnFront) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RunConfig c = small_lotz(2, seed);
        c.archive_size = 3;
        const RunRecord r = run(c);
        EXPECT_FALSE(r.censored);
        ASSERT_TRUE(r.iterations_to_full_front.has_value());
        EXPECT_EQ(*r.iterations_to_full_front, r.iterations);
        ASSERT_TRUE(r.iterations_to_first_pareto.has_value());
        EXPECT_LE(*r.iterations_to_first_pareto, r.iterations);
        EXPECT_DOUBLE_EQ(r.coverage_fraction, 1.0);
        EXPECT_DOUBLE_EQ(r.hv_fraction, 1.0);
        EXPECT_EQ(r.archive_final, 3u);
        EXPECT_EQ(r.potential_final, 2);
    }
}

TEST(Run, ZeroBudgetIsConfigError) {
    RunConfig c = small_lotz(8, 1);
    c.budget = 0;
    EXPECT_THROW(run(c), ConfigError);
}

TEST(Run, BudgetCensorsRun) {
    RunConfig c = small_lotz(40, 1);
    c.budget = 10;
    const RunRecord r = run(c);
    EXPECT_TRUE(r.censored);
    EXPECT_EQ(r.iterations, 10u);
    EXPECT_FALSE(r.iterations_to_full_front.has_value());
}

TEST(Run, Deterministic) {
    const RunRecord a = run(small_lotz(12, 5));
    const RunRecord b = run(small_lotz(12, 5));
    auto ja = to_json(a);
    auto jb = to_json(b);
    ja.erase("wall_seconds");
    jb.erase("wall_seconds");
    EXPECT_EQ(ja, jb);
}

TEST(Run, CoverageStopAndTrace) {
    RunConfig c = small_lotz(10, 3);
    c.stop = StopRule::Coverage;
    c.coverage_target = 0.5;
    std::ostringstream trace;
    c.trace = &trace;
    const RunRecord r = run(c);
    EXPECT_GE(r.coverage_fraction, 0.5);
    EXPECT_FALSE(r.censored);
    std::istringstream lines(trace.str());
    std::string line;
    int count = 0;
    std::uint64_t last_t = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (count == 0) {
            EXPECT_EQ(j.at("event"), "init");
        }
        for (const char* key : {"t", "event", "candidate", "archive_size", "w", "coverage", "hv"}) {
            EXPECT_TRUE(j.contains(key)) << key;
        }
        EXPECT_GE(j.at("t").get<std::uint64_t>(), last_t);
        last_t = j.at("t").get<std::uint64_t>();
        ++count;
    }
    EXPECT_GT(count, 1);
}

TEST(Run, BudgetStopRunsWholeBudget) {
    RunConfig c = small_lotz(6, 3);
    c.stop = StopRule::Budget;
    c.budget = 5000;
    const RunRecord r = run(c);
    EXPECT_EQ(r.iterations, 5000u);
    EXPECT_FALSE(r.censored);
    EXPECT_TRUE(r.iterations_to_full_front.has_value());
}

TEST(Run, OmmAndCoczRun) {
    for (auto kind : {BenchmarkKind::Omm, BenchmarkKind::Cocz}) {
        RunConfig c;
        c.benchmark = kind;
        c.n = 20;
        c.archive_size = 21;
        c.budget = 2000;
        c.seed = 2;
        c.check_invariants = true;
        const RunRecord r = run(c);
        EXPECT_GT(r.iterations, 0u);
        EXPECT_GT(r.coverage_fraction, 0.0);
    }
}

TEST(DefaultBudget, Rules) {
    EXPECT_EQ(default_budget(Benchmark::lotz(10), MutationKind::OneBit), 50'000u);
    EXPECT_EQ(default_budget(Benchmark::lotz(10), MutationKind::StandardBit), 200'000u);
    EXPECT_EQ(default_budget(Benchmark::omm(10), MutationKind::OneBit), 1'000'000u);
    const double l = std::log(16.0);
    EXPECT_EQ(default_budget(Benchmark::mlotz(4, 16), MutationKind::OneBit),
              static_cast<std::uint64_t>(std::ceil(50.0 * 4096 * l * l)));
}

TEST(StopRule, Parse) {
    EXPECT_EQ(parse_stop_rule("full-front").first, StopRule::FullFront);
    EXPECT_EQ(parse_stop_rule("budget").first, StopRule::Budget);
    const auto [rule, target] = parse_stop_rule("coverage:0.25");
    EXPECT_EQ(rule, StopRule::Coverage);
    EXPECT_DOUBLE_EQ(target, 0.25);
    EXPECT_THROW(parse_stop_rule("coverage:1.5"), ConfigError);
    EXPECT_THROW(parse_stop_rule("forever"), ConfigError);
}

TEST(Sweep, RowCountAndSeeds) {
    const auto rows = sweep(small_sweep());
    ASSERT_EQ(rows.size(), 6u);
    std::set<std::uint64_t> seeds;
    for (const auto& r : rows) {
        EXPECT_TRUE(r.error.empty());
        EXPECT_EQ(r.record.config.seed, derive_seed(42, static_cast<std::uint64_t>(r.n), static_cast<std::uint64_t>(r.replicate)));
        seeds.insert(r.record.config.seed);
    }
    EXPECT_EQ(seeds.size(), 6u);
}

TEST(Sweep, RepeatableAndThreadIndependent) {
    SweepSpec spec = small_sweep();
    const std::string one = csv_of(sweep(spec));
    EXPECT_EQ(one, csv_of(sweep(spec)));
    spec.threads = 3;
    std::ostringstream streamed;
    const auto rows = sweep(spec, &streamed);
    EXPECT_EQ(one, csv_of(rows));
    EXPECT_EQ(one, streamed.str());
}

TEST(Sweep, CsvRoundTrip) {
    const auto rows = sweep(small_sweep());
    std::istringstream in(csv_of(rows));
    const auto back = read_sweep_csv(in);
    ASSERT_EQ(back.size(), rows.size());
    const auto direct = to_csv_records(rows);
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].n, direct[i].n);
        EXPECT_EQ(back[i].first_pareto, direct[i].first_pareto);
        EXPECT_EQ(back[i].full_front, direct[i].full_front);
        EXPECT_EQ(back[i].censored, direct[i].censored);
    }
}

TEST(Sweep, HeaderColumns) {
    std::ostringstream out;
    write_csv_header(out, true);
    EXPECT_EQ(out.str(), std::string(kSweepColumns) + ",wall_seconds\n");
}

TEST(SweepConfig, Parse) {
    std::istringstream in(R"(# LOTZ sweep
benchmark = mlotz
m = 4
n = 8, 12 ,16
replicates = 5
seed = 9
mutation = standard-bit
archiver = hva
archive_size = front
budget = default
stop = coverage:0.5   # half the front
threads = 2
)");
    const SweepSpec s = parse_sweep_config(in);
    EXPECT_EQ(s.base.m, 4);
    EXPECT_EQ(s.n_values, (std::vector<int>{8, 12, 16}));
    EXPECT_EQ(s.replicates, 5);
    EXPECT_EQ(s.base_seed, 9u);
    EXPECT_EQ(s.base.mutation, MutationKind::StandardBit);
    EXPECT_EQ(s.base.archiver, ArchiverKind::Hva);
    EXPECT_EQ(s.archive_size.to_string(), "front");
    EXPECT_FALSE(s.budget.has_value());
    EXPECT_EQ(s.base.stop, StopRule::Coverage);
    EXPECT_DOUBLE_EQ(s.base.coverage_target, 0.5);
    EXPECT_EQ(s.threads, 2u);
    EXPECT_EQ(s.row_config(12, 0).archive_size, 49u);
}

TEST(SweepConfig, Errors) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_sweep_config(in);
    };
    EXPECT_THROW(parse("n = 8\nn = 9\n"), ConfigError);
    EXPECT_THROW(parse("n = 8\ncolour = red\n"), ConfigError);
    EXPECT_THROW(parse("n = 8\nbudget = 0\n"), ConfigError);
    EXPECT_THROW(parse("n = eight\n"), ConfigError);
    EXPECT_THROW(parse("replicates = 2\n"), ConfigError);
    EXPECT_THROW(parse("m = 4\nn = 9\n"), ConfigError);
    EXPECT_THROW(parse("just words\n"), ConfigError);
}

TEST(ArchiveSize, Rules) {
    const Benchmark b = Benchmark::lotz(10);
    EXPECT_EQ(ArchiveSizeRule::parse("front").resolve(b), 11u);
    EXPECT_EQ(ArchiveSizeRule::parse("n+1").resolve(b), 11u);
    EXPECT_EQ(ArchiveSizeRule::parse("n/2+1").resolve(b), 6u);
    EXPECT_EQ(ArchiveSizeRule::parse("7").resolve(b), 7u);
    EXPECT_THROW(ArchiveSizeRule::parse("0"), ConfigError);
}

TEST(Fit, CubicSlope) {
    const auto fit = fit_scaling(synthetic([](double n) { return n * n * n; }), GrowthModel::parse("n3"));
    EXPECT_NEAR(fit.slope, 3.0, 1e-6);
    for (const auto& r : fit.table) EXPECT_NEAR(r.ratio, 1.0, 1e-6);
    EXPECT_NEAR(fit.ratio_spread(), 1.0, 1e-6);
}

TEST(Fit, ConstantRatioAgainstMatchingModel) {
    const auto model = GrowthModel::parse("n3log2");
    const auto fit = fit_scaling(synthetic([&](double n) { return 7.0 * model(n); }), model);
    for (const auto& r : fit.table) EXPECT_NEAR(r.ratio, 7.0, 1e-3);
}

TEST(Fit, CensoredRunsExcludedWithWarning) {
    auto rows = synthetic([](double n) { return n * n; });
    rows[0].censored = true;
    rows[0].full_front.reset();
    const auto fit = fit_scaling(rows, GrowthModel::parse("n2"));
    EXPECT_EQ(fit.warnings.size(), 1u);
    EXPECT_EQ(fit.table.front().used, 2u);
    EXPECT_NEAR(fit.slope, 2.0, 1e-6);
}

TEST(Fit, NeedsThreeSizes) {
    std::vector<CsvRecord> rows{{10, 5, 5, false}, {20, 9, 9, false}};
    EXPECT_THROW(fit_scaling(rows, GrowthModel::parse("n2")), ConfigError);
    EXPECT_THROW(GrowthModel::parse("n5"), ConfigError);
    EXPECT_EQ(GrowthModel::grid(6).name(), "grid(6)");
}
