#include "atsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include <boost/math/distributions/normal.hpp>

namespace atsp {

const char* to_string(Strategy s) {
    return s == Strategy::SteadyState ? "steady" : "elitist";
}

const char* to_string(Crossover c) { return c == Crossover::ODEC ? "odec" : "dec"; }

std::vector<RunRecord> run_trials(const AtspInstance& instance, const GaConfig& config, int runs,
                                  std::uint64_t base_seed, std::optional<Cost> optimum_hint,
                                  int workers) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    std::vector<RunRecord> records(runs);

    // First run on the calling thread so config errors surface as exceptions.
    GaConfig first = config;
    first.seed = base_seed;
    records[0] = run_ga(instance, first, optimum_hint);

    std::atomic<int> next{1};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&] {
        try {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= runs) break;
                GaConfig run_config = config;
                run_config.seed = base_seed + static_cast<std::uint64_t>(i);
                records[i] = run_ga(instance, run_config, optimum_hint);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    if (runs > 1) {
        const int thread_count = std::clamp(workers, 1, runs - 1);
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    if (error) std::rethrow_exception(error);
    return records;
}

MetricsRow compute_metrics(const std::string& instance_name, std::span<const RunRecord> records,
                           Cost optimum) {
    if (optimum <= 0) throw std::invalid_argument("optimum must be positive");
    if (records.empty()) throw std::invalid_argument("no records");

    // Integer accumulation; division happens once per metric.
    long long successes = 0;
    Cost err_sum = 0, init_sum = 0;
    double time_sum = 0.0;
    for (const RunRecord& record : records) {
        if (record.best_length < optimum)
            throw std::invalid_argument("run below the registry optimum for " + instance_name +
                                        ": the registry value must be wrong");
        if (record.best_length == optimum) ++successes;
        err_sum += record.best_length - optimum;
        init_sum += record.init_best_length - optimum;
        time_sum += record.time_to_best_s;
    }
    const double runs = static_cast<double>(records.size());
    MetricsRow row;
    row.instance = instance_name;
    row.runs = static_cast<int>(records.size());
    row.f_opt = static_cast<double>(successes) / runs;
    row.delta_err = 100.0 * static_cast<double>(err_sum) / (runs * static_cast<double>(optimum));
    row.delta_init = 100.0 * static_cast<double>(init_sum) / (runs * static_cast<double>(optimum));
    row.mean_time_to_best_s = time_sum / runs;
    return row;
}

StatTestResult stat_test(long long successes1, long long n1, long long successes2, long long n2,
                         double alpha) {
    if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must be in (0,1)");
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("run counts must be >= 1");
    if (successes1 < 0 || successes1 > n1 || successes2 < 0 || successes2 > n2)
        throw std::invalid_argument("successes out of range");

    StatTestResult result;
    result.n1 = n1;
    result.n2 = n2;
    result.p1_hat = static_cast<double>(successes1) / static_cast<double>(n1);
    result.p2_hat = static_cast<double>(successes2) / static_cast<double>(n2);
    result.pooled = static_cast<double>(successes1 + successes2) / static_cast<double>(n1 + n2);
    result.sd = std::sqrt(result.pooled * (1.0 - result.pooled) *
                          (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
    if (result.sd == 0.0) {
        // zero pooled variance: the normal approximation is undefined
        result.a = result.p1_hat == result.p2_hat ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        result.a = std::abs(result.p1_hat - result.p2_hat) / result.sd;
    }
    const boost::math::normal_distribution<double> normal;
    result.significant = result.a > boost::math::quantile(normal, 1.0 - alpha / 2.0);
    return result;
}

void write_run_csv_header(std::ostream& out) {
    out << "instance,run,seed,strategy,crossover,time_limit_s,best_length,optimum,gap_percent,"
           "init_best_length,init_gap_percent,time_to_best_s,iterations,restarts,"
           "proven_optimal_at_init\n";
}

void write_run_csv_row(std::ostream& out, const CsvRunRow& row) {
    out << row.instance << ',' << row.run << ',' << row.seed << ',' << row.strategy << ','
        << row.crossover << ',' << row.time_limit_s << ',' << row.best_length << ',' << row.optimum
        << ',' << row.gap_percent << ',' << row.init_best_length << ',' << row.init_gap_percent
        << ',' << row.time_to_best_s << ',' << row.iterations << ',' << row.restarts << ','
        << (row.proven_optimal_at_init ? 1 : 0) << '\n';
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed " + what + ": '" + s + "'");
    }
}

}  // namespace

std::vector<SuccessCounts> read_success_counts(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty results file");

    std::vector<SuccessCounts> counts;
    const auto find_or_add = [&](const std::string& name) -> SuccessCounts& {
        for (auto& entry : counts)
            if (entry.instance == name) return entry;
        counts.push_back({name, 0, 0});
        return counts.back();
    };

    if (line.rfind("instance,run,seed", 0) == 0) {
        // per-run bench output: success == best_length equals the optimum
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto fields = split_csv_line(line);
            if (fields.size() < 15) throw std::runtime_error("malformed results row: " + line);
            SuccessCounts& entry = find_or_add(fields[0]);
            entry.runs += 1;
            if (parse_ll(fields[6], "best_length") == parse_ll(fields[7], "optimum"))
                entry.successes += 1;
        }
        return counts;
    }

    // summary format: instance,successes,runs (header optional)
    const auto consume_summary_row = [&](const std::string& row) {
        if (row.empty()) return;
        const auto fields = split_csv_line(row);
        if (fields.size() != 3) throw std::runtime_error("malformed summary row: " + row);
        SuccessCounts& entry = find_or_add(fields[0]);
        entry.successes += parse_ll(fields[1], "successes");
        entry.runs += parse_ll(fields[2], "runs");
        if (entry.successes < 0 || entry.runs < entry.successes)
            throw std::runtime_error("inconsistent counts for " + fields[0]);
    };
    if (line.rfind("instance,successes,runs", 0) != 0) consume_summary_row(line);
    while (std::getline(in, line)) consume_summary_row(line);
    return counts;
}

std::vector<SuccessCounts> read_success_counts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_success_counts(in);
}

std::string compare_results(const std::vector<SuccessCounts>& a,
                            const std::vector<SuccessCounts>& b, double alpha) {
    std::ostringstream out;
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "%-12s %10s %10s %8s  %s\n", "instance", "F_opt(A)",
                  "F_opt(B)", "A", "significant");
    out << buffer;

    double sum_a = 0.0, sum_b = 0.0;
    int matched = 0;
    for (const SuccessCounts& row_a : a) {
        const SuccessCounts* row_b = nullptr;
        for (const SuccessCounts& candidate : b)
            if (candidate.instance == row_a.instance) {
                row_b = &candidate;
                break;
            }
        if (!row_b) continue;
        const StatTestResult test =
            stat_test(row_a.successes, row_a.runs, row_b->successes, row_b->runs, alpha);
        std::snprintf(buffer, sizeof buffer, "%-12s %10.3f %10.3f %8.1f  %s\n",
                      row_a.instance.c_str(), test.p1_hat, test.p2_hat, test.a,
                      test.significant ? "yes" : "no");
        out << buffer;
        sum_a += test.p1_hat;
        sum_b += test.p2_hat;
        ++matched;
    }
    if (matched == 0) throw std::runtime_error("no common instances between the two files");
    std::snprintf(buffer, sizeof buffer, "%-12s %10.3f %10.3f\n", "Average", sum_a / matched,
                  sum_b / matched);
    out << buffer;
    return out.str();
}

}  // namespace atsp
