#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "atsp/ga.hpp"
#include "atsp/instance.hpp"

namespace atsp {

// Table-style per-instance aggregate over a batch of runs.
struct MetricsRow {
    std::string instance;
    int runs = 0;
    double f_opt = 0.0;       // frequency of hitting the registry optimum
    double delta_err = 0.0;   // mean 100*(best-opt)/opt
    double delta_init = 0.0;  // mean 100*(init_best-opt)/opt
    double mean_time_to_best_s = 0.0;
};

// Two-proportion significance test: A = |P1-P2| / SD with pooled variance.
struct StatTestResult {
    double p1_hat = 0.0, p2_hat = 0.0;
    long long n1 = 0, n2 = 0;
    double pooled = 0.0;
    double sd = 0.0;
    double a = 0.0;  // +inf when the pooled variance is zero but P1 != P2
    bool significant = false;
};

// Runs `runs` independent GA executions with seeds base_seed+i; `workers`
// bounds the number of concurrent runs.
std::vector<RunRecord> run_trials(const AtspInstance& instance, const GaConfig& config, int runs,
                                  std::uint64_t base_seed, std::optional<Cost> optimum_hint,
                                  int workers = 1);

MetricsRow compute_metrics(const std::string& instance_name, std::span<const RunRecord> records,
                           Cost optimum);

StatTestResult stat_test(long long successes1, long long n1, long long successes2, long long n2,
                         double alpha);

// One CSV row per run, as produced by the bench command.
struct CsvRunRow {
    std::string instance;
    int run = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    std::string crossover;
    double time_limit_s = 0.0;
    Cost best_length = 0;
    Cost optimum = 0;
    double gap_percent = 0.0;
    Cost init_best_length = 0;
    double init_gap_percent = 0.0;
    double time_to_best_s = 0.0;
    long long iterations = 0;
    int restarts = 0;
    bool proven_optimal_at_init = false;
};

void write_run_csv_header(std::ostream& out);
void write_run_csv_row(std::ostream& out, const CsvRunRow& row);

// Per-instance success counts recovered from a results file: either the
// per-run CSV above or a hand-entered summary "instance,successes,runs".
struct SuccessCounts {
    std::string instance;
    long long successes = 0;
    long long runs = 0;
};
std::vector<SuccessCounts> read_success_counts(std::istream& in);
std::vector<SuccessCounts> read_success_counts_file(const std::string& path);

// Per-instance frequency comparison of two results files, with the A statistic
// at level alpha and a trailing aggregate row. Returns the formatted table.
std::string compare_results(const std::vector<SuccessCounts>& a,
                            const std::vector<SuccessCounts>& b, double alpha);

const char* to_string(Strategy s);
const char* to_string(Crossover c);

}  // namespace atsp
