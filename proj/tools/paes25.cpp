// Command-line front end: run, sweep, fit, verify, oracle.
// Exit codes: 0 success or pass, 1 failed check, 2 usage or configuration error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paes25/paes25.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunArgs {
    std::string benchmark = "mlotz";
    int m = 2;
    int n = 16;
    std::string mutation = "one-bit";
    std::string archiver = "aga";
    std::size_t archive_size = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::string stop = "full-front";
    std::string trace;
    bool trace_every_step = false;
    bool check_invariants = false;
};

int do_run(const RunArgs& a) {
    paes25::RunConfig cfg;
    cfg.benchmark = paes25::parse_benchmark_kind(a.benchmark);
    cfg.m = a.m;
    cfg.n = a.n;
    cfg.mutation = paes25::parse_mutation_kind(a.mutation);
    cfg.archiver = paes25::parse_archiver_kind(a.archiver);
    cfg.archive_size = a.archive_size ? a.archive_size : static_cast<std::size_t>(cfg.make_benchmark().front_size());
    cfg.seed = a.seed;
    if (a.budget_set) cfg.budget = a.budget;
    std::tie(cfg.stop, cfg.coverage_target) = paes25::parse_stop_rule(a.stop);
    cfg.check_invariants = a.check_invariants;
    std::unique_ptr<std::ofstream> trace;
    if (!a.trace.empty()) {
        trace = std::make_unique<std::ofstream>(a.trace);
        if (!*trace) throw paes25::ConfigError("cannot open trace file '" + a.trace + "'");
        cfg.trace = trace.get();
        cfg.trace_every_step = a.trace_every_step;
    }
    const auto rec = paes25::run(cfg);
    std::cout << paes25::to_json(rec).dump() << '\n';
    return kPass;
}

int do_sweep(const std::string& path, unsigned threads) {
    auto spec = paes25::load_sweep_config(path);
    if (threads) spec.threads = threads;
    std::unique_ptr<std::ofstream> file;
    std::ostream* out = &std::cout;
    if (!spec.output.empty()) {
        file = std::make_unique<std::ofstream>(spec.output);
        if (!*file) throw paes25::ConfigError("cannot open output '" + spec.output + "'");
        out = file.get();
    }
    const auto rows = paes25::sweep(spec, out);
    std::size_t censored = 0;
    std::size_t errors = 0;
    for (const auto& r : rows) {
        censored += r.record.censored ? 1 : 0;
        errors += r.error.empty() ? 0 : 1;
    }
    std::cerr << "sweep: " << rows.size() << " rows, " << censored << " censored, " << errors << " errors";
    if (!spec.output.empty()) std::cerr << ", written to " << spec.output;
    std::cerr << '\n';
    return errors ? kFail : kPass;
}

int do_fit(const std::string& input, const std::string& model_name, const std::string& metric_name) {
    std::ifstream in(input);
    if (!in) throw paes25::ConfigError("cannot open '" + input + "'");
    const auto rows = paes25::read_sweep_csv(in);
    const auto model = paes25::GrowthModel::parse(model_name);
    paes25::FitMetric metric;
    if (metric_name == "full-front") {
        metric = paes25::FitMetric::FullFront;
    } else if (metric_name == "first-pareto") {
        metric = paes25::FitMetric::FirstPareto;
    } else {
        throw paes25::ConfigError("unknown metric '" + metric_name + "' (expected full-front|first-pareto)");
    }
    const auto fit = paes25::fit_scaling(rows, model, metric);
    for (const auto& w : fit.warnings) std::cerr << "warning: " << w << '\n';
    nlohmann::json table = nlohmann::json::array();
    for (const auto& r : fit.table) {
        table.push_back({{"n", r.n}, {"runs", r.runs}, {"used", r.used}, {"mean", r.mean}, {"model", r.model},
                         {"ratio", r.ratio}});
    }
    nlohmann::json out = {{"model", model.name()},   {"metric", metric_name},
                          {"slope", fit.slope},      {"intercept", fit.intercept},
                          {"ratio_spread", fit.ratio_spread()}, {"table", table}};
    std::cout << out.dump(2) << '\n';
    return kPass;
}

int do_verify(const std::string& suite, const std::vector<std::string>& params) {
    const auto report = paes25::verify::run_suite(suite, paes25::verify::Params::parse(params));
    std::cout << report.to_json().dump(2) << '\n';
    return report.pass ? kPass : kFail;
}

struct CoverArgs {
    int dims = 1;
    int axis_nodes = 2;
    std::string mode = "simple";
    int n = 2;
    int reps = 100;
    std::uint64_t seed = 0;
    std::vector<int> start;
};

int do_cover(const CoverArgs& a) {
    paes25::oracle::GridWalkConfig cfg;
    cfg.dims = a.dims;
    cfg.axis_nodes = a.axis_nodes;
    cfg.mode = paes25::oracle::parse_walk_mode(a.mode);
    cfg.lazy_n = a.n;
    cfg.start = a.start;
    cfg.validate();
    if (a.reps < 1) throw paes25::ConfigError("reps must be at least 1");
    double sum = 0;
    double sq = 0;
    std::uint64_t lo = UINT64_MAX;
    std::uint64_t hi = 0;
    for (int r = 0; r < a.reps; ++r) {
        paes25::Rng rng(paes25::derive_seed(a.seed, static_cast<std::uint64_t>(a.axis_nodes), static_cast<std::uint64_t>(r)));
        const auto t = paes25::oracle::cover_time(cfg, rng);
        sum += static_cast<double>(t);
        sq += static_cast<double>(t) * static_cast<double>(t);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    const double mean = sum / a.reps;
    const double var = a.reps > 1 ? (sq - a.reps * mean * mean) / (a.reps - 1) : 0.0;
    nlohmann::json out = {{"dims", a.dims}, {"axis_nodes", a.axis_nodes}, {"mode", a.mode}, {"reps", a.reps},
                          {"mean", mean},   {"stddev", std::sqrt(std::max(0.0, var))},  {"min", lo},
                          {"max", hi}};
    if (cfg.mode == paes25::oracle::WalkMode::Lazy) out["n"] = a.n;
    std::cout << out.dump() << '\n';
    return kPass;
}

int do_front(const std::string& benchmark, int m, int n) {
    const paes25::Benchmark b(paes25::parse_benchmark_kind(benchmark), m, n);
    nlohmann::json front = nlohmann::json::array();
    for (const auto& v : paes25::oracle::brute_force_front(b)) front.push_back(std::vector<int>(v.begin(), v.end()));
    std::cout << nlohmann::json{{"benchmark", b.name()}, {"m", m}, {"n", n}, {"front", front}}.dump() << '\n';
    return kPass;
}

int do_antichain(const std::string& benchmark, int m, int n) {
    const paes25::Benchmark b(paes25::parse_benchmark_kind(benchmark), m, n);
    const auto size = paes25::oracle::max_antichain_size(b);
    std::cout << nlohmann::json{{"benchmark", b.name()}, {"m", m}, {"n", n}, {"max_antichain", size}}.dump() << '\n';
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PAES-25 experiments on m-LOTZ, OMM and COCZ"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run PAES-25 once and print the run record as JSON");
    run->add_option("--benchmark", run_args.benchmark, "mlotz|omm|cocz")->capture_default_str();
    run->add_option("--m", run_args.m, "Number of objectives")->capture_default_str();
    run->add_option("--n", run_args.n, "Bitstring length")->capture_default_str();
    run->add_option("--mutation", run_args.mutation, "one-bit|standard-bit")->capture_default_str();
    run->add_option("--archiver", run_args.archiver, "aga|hva|mga|none")->capture_default_str();
    run->add_option("--archive-size", run_args.archive_size, "Archive capacity L (default: front size)");
    run->add_option("--seed", run_args.seed, "RNG seed")->capture_default_str();
    auto* budget_opt = run->add_option("--budget", run_args.budget, "Iteration budget (default depends on the setup)");
    run->add_option("--stop", run_args.stop, "full-front|budget|coverage:X")->capture_default_str();
    run->add_option("--trace", run_args.trace, "Write a JSON-lines trace to this path");
    run->add_flag("--trace-every-step", run_args.trace_every_step, "Trace every iteration, not only state changes");
    run->add_flag("--check-invariants", run_args.check_invariants, "Re-check invariants after every step");

    std::string sweep_config;
    unsigned sweep_threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Run a seeded sweep described by a key=value file and write CSV");
    sweep->add_option("--config", sweep_config, "Sweep configuration file")->required();
    sweep->add_option("--threads", sweep_threads, "Override the worker count");

    std::string fit_input;
    std::string fit_model;
    std::string fit_metric = "full-front";
    auto* fit = app.add_subcommand("fit", "Log-log fit and ratio table over sweep CSV");
    fit->add_option("--input", fit_input, "Sweep CSV")->required();
    fit->add_option("--model", fit_model, "n3|n3log2|grid(m)|n4|n2")->required();
    fit->add_option("--metric", fit_metric, "full-front|first-pareto")->capture_default_str();

    std::string suite;
    std::vector<std::string> suite_params;
    auto* verify = app.add_subcommand("verify", "Run a named property check");
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("params", suite_params, "Suite parameters as key=value");

    auto* oracle = app.add_subcommand("oracle", "Independent ground truth");
    oracle->require_subcommand(1);
    CoverArgs cover_args;
    auto* cover = oracle->add_subcommand("cover", "Mean cover time of a random walk on a grid graph");
    cover->add_option("--dims", cover_args.dims, "Grid dimension k")->capture_default_str();
    cover->add_option("--axis-nodes", cover_args.axis_nodes, "Nodes per axis")->capture_default_str();
    cover->add_option("--mode", cover_args.mode, "simple|lazy")->capture_default_str();
    cover->add_option("--n", cover_args.n, "Lazy walk: each direction has probability 1/n")->capture_default_str();
    cover->add_option("--reps", cover_args.reps, "Replicates")->capture_default_str();
    cover->add_option("--seed", cover_args.seed, "RNG seed")->capture_default_str();
    cover->add_option("--start", cover_args.start, "Start node (default: origin)")->delimiter(',');
    std::string o_bench = "mlotz";
    int o_m = 2;
    int o_n = 8;
    auto* front = oracle->add_subcommand("front", "Pareto front by exhaustive enumeration");
    auto* antichain = oracle->add_subcommand("antichain", "Largest antichain of attainable fitness vectors");
    for (auto* sub : {front, antichain}) {
        sub->add_option("--benchmark", o_bench, "mlotz|omm|cocz")->capture_default_str();
        sub->add_option("--m", o_m, "Number of objectives")->capture_default_str();
        sub->add_option("--n", o_n, "Bitstring length")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    run_args.budget_set = budget_opt->count() > 0;

    try {
        if (*run) return do_run(run_args);
        if (*sweep) return do_sweep(sweep_config, sweep_threads);
        if (*fit) return do_fit(fit_input, fit_model, fit_metric);
        if (*verify) return do_verify(suite, suite_params);
        if (*cover) return do_cover(cover_args);
        if (*front) return do_front(o_bench, o_m, o_n);
        if (*antichain) return do_antichain(o_bench, o_m, o_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const paes25::TooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
