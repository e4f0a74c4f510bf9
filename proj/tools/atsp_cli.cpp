// Command line front end: solve one instance, run a benchmark batch, or
// compare two result files with the two-proportion significance test.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atsp/bench.hpp"
#include "atsp/ga.hpp"
#include "atsp/instance.hpp"
#include "atsp/orp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GaFlags {
    int population = 100;
    int tournament = 10;
    double p_mut = 0.1;
    double time_limit_s = 1.0;
    long long iterations = 0;
    std::string strategy = "steady";
    std::string crossover = "odec";
    bool no_restarts = false;
    std::uint64_t seed = 0;
};

void add_ga_flags(CLI::App* cmd, GaFlags& flags) {
    cmd->add_option("--time-limit", flags.time_limit_s, "wall clock limit per run, seconds");
    cmd->add_option("--iterations", flags.iterations,
                    "iteration budget (replaces the wall clock; reproducible)");
    cmd->add_option("--pop", flags.population, "population size");
    cmd->add_option("--tournament", flags.tournament, "tournament size");
    cmd->add_option("--pmut", flags.p_mut, "mutation probability");
    cmd->add_option("--strategy", flags.strategy, "population strategy")
        ->check(CLI::IsMember({"steady", "elitist"}));
    cmd->add_option("--crossover", flags.crossover, "crossover operator")
        ->check(CLI::IsMember({"odec", "dec"}));
    cmd->add_flag("--no-restarts", flags.no_restarts, "disable the doubling restart rule");
    cmd->add_option("--seed", flags.seed, "RNG seed");
}

atsp::GaConfig to_config(const GaFlags& flags) {
    atsp::GaConfig config;
    config.population = flags.population;
    config.tournament = flags.tournament;
    config.p_mut = flags.p_mut;
    config.strategy =
        flags.strategy == "steady" ? atsp::Strategy::SteadyState : atsp::Strategy::ElitistRecombination;
    config.crossover = flags.crossover == "odec" ? atsp::Crossover::ODEC : atsp::Crossover::DEC;
    config.restarts = !flags.no_restarts;
    config.seed = flags.seed;
    if (flags.iterations > 0) {
        config.max_iterations = flags.iterations;
        config.time_limit_s = 0.0;
    } else {
        config.time_limit_s = flags.time_limit_s;
    }
    return config;
}

int cmd_solve(const std::string& path, const GaFlags& flags, std::optional<long long> optimum) {
    const atsp::AtspInstance instance = atsp::parse_tsplib_atsp_file(path);
    const atsp::RunRecord record = atsp::run_ga(instance, to_config(flags),
                                                optimum ? std::optional<atsp::Cost>(*optimum)
                                                        : std::nullopt);

    json out;
    out["instance"] = instance.name();
    out["n"] = instance.n();
    out["best_length"] = record.best_length;
    if (optimum)
        out["gap_percent"] =
            100.0 * static_cast<double>(record.best_length - *optimum) / static_cast<double>(*optimum);
    out["init_best_length"] = record.init_best_length;
    out["time_to_best_s"] = record.time_to_best_s;
    out["iterations"] = record.iterations;
    out["restarts"] = record.restarts;
    out["proven_optimal_at_init"] = record.proven_optimal_at_init;
    json tour = json::array();
    for (int v : record.best.order()) tour.push_back(v + 1);  // 1-based, TSPLIB style
    out["tour"] = tour;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_bench(const std::string& instances_dir, const std::string& optima_path, int runs,
              int workers, const GaFlags& flags, const std::string& out_path) {
    const atsp::OptimaRegistry registry = atsp::load_optima_registry_file(optima_path);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(instances_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".atsp")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .atsp files in " + instances_dir);

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    atsp::write_run_csv_header(out);

    const atsp::GaConfig config = to_config(flags);
    std::printf("%-12s %5s %12s %8s %12s %10s\n", "instance", "runs", "delta_init", "F_opt",
                "delta_err", "time_s");
    for (const fs::path& file : files) {
        const atsp::AtspInstance instance = atsp::parse_tsplib_atsp_file(file.string());
        std::optional<atsp::Cost> optimum = registry.find(instance.name());
        if (!optimum) {
            if (instance.n() <= 16) {
                optimum = atsp::held_karp(instance).length;
            } else {
                std::fprintf(stderr, "warning: no registry optimum for %s (n=%d), skipping\n",
                             instance.name().c_str(), instance.n());
                continue;
            }
        }

        const std::vector<atsp::RunRecord> records =
            atsp::run_trials(instance, config, runs, flags.seed, optimum, workers);
        for (int i = 0; i < static_cast<int>(records.size()); ++i) {
            const atsp::RunRecord& record = records[i];
            atsp::CsvRunRow row;
            row.instance = instance.name();
            row.run = i;
            row.seed = flags.seed + static_cast<std::uint64_t>(i);
            row.strategy = atsp::to_string(config.strategy);
            row.crossover = atsp::to_string(config.crossover);
            row.time_limit_s = config.time_limit_s;
            row.best_length = record.best_length;
            row.optimum = *optimum;
            row.gap_percent = 100.0 * static_cast<double>(record.best_length - *optimum) /
                              static_cast<double>(*optimum);
            row.init_best_length = record.init_best_length;
            row.init_gap_percent = 100.0 * static_cast<double>(record.init_best_length - *optimum) /
                                   static_cast<double>(*optimum);
            row.time_to_best_s = record.time_to_best_s;
            row.iterations = record.iterations;
            row.restarts = record.restarts;
            row.proven_optimal_at_init = record.proven_optimal_at_init;
            atsp::write_run_csv_row(out, row);
        }

        const atsp::MetricsRow metrics = atsp::compute_metrics(instance.name(), records, *optimum);
        std::printf("%-12s %5d %12.3f %8.3f %12.4f %10.3f\n", metrics.instance.c_str(),
                    metrics.runs, metrics.delta_init, metrics.f_opt, metrics.delta_err,
                    metrics.mean_time_to_best_s);
    }
    return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, double alpha) {
    const auto a = atsp::read_success_counts_file(a_path);
    const auto b = atsp::read_success_counts_file(b_path);
    std::cout << atsp::compare_results(a, b, alpha);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ATSP memetic solver with exact recombination crossover"};
    app.require_subcommand(1);

    GaFlags flags;
    std::string instance_path;
    std::optional<long long> optimum;
    CLI::App* solve = app.add_subcommand("solve", "run the GA once on a TSPLIB ATSP file");
    solve->add_option("instance", instance_path, "TSPLIB .atsp file")->required();
    add_ga_flags(solve, flags);
    solve->add_option("--optimum", optimum, "known optimum; the run stops when it is reached");

    std::string instances_dir, optima_path, out_path = "results.csv";
    int runs = 10, workers = 1;
    CLI::App* bench = app.add_subcommand("bench", "batch runs over a directory of instances");
    bench->add_option("--instances", instances_dir, "directory with .atsp files")->required();
    bench->add_option("--optima", optima_path, "registry of known optima")->required();
    bench->add_option("--runs", runs, "runs per instance");
    bench->add_option("--workers", workers, "concurrent runs");
    bench->add_option("--out", out_path, "output CSV");
    add_ga_flags(bench, flags);

    std::string a_path, b_path;
    double alpha = 0.05;
    CLI::App* compare = app.add_subcommand("compare", "two-proportion test between result files");
    compare->add_option("a", a_path, "results CSV (bench output or instance,successes,runs)")
        ->required();
    compare->add_option("b", b_path, "results CSV")->required();
    compare->add_option("--alpha", alpha, "significance level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // 1 on usage errors, 0 for --help
    }

    try {
        if (solve->parsed()) return cmd_solve(instance_path, flags, optimum);
        if (bench->parsed()) return cmd_bench(instances_dir, optima_path, runs, workers, flags, out_path);
        return cmd_compare(a_path, b_path, alpha);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
