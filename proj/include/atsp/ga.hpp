#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/tour.hpp"

namespace atsp {

enum class Strategy { SteadyState, ElitistRecombination };
enum class Crossover { ODEC, DEC };

struct GaConfig {
    int population = 100;
    int tournament = 10;
    double p_mut = 0.1;
    double time_limit_s = 1.0;
    Strategy strategy = Strategy::SteadyState;
    Crossover crossover = Crossover::ODEC;
    bool restarts = true;
    long long t_min = 0;           // restart floor; 0 means 2 * population
    std::uint64_t seed = 0;
    long long max_iterations = 0;  // testing mode: stop after this many iterations (0 = off)

    // called after every iteration with the population; for tests/diagnostics
    std::function<void(const std::vector<Tour>&)> observer;
};

struct RunRecord {
    Tour best;
    Cost best_length = 0;
    Cost init_best_length = 0;  // best of the first initialization
    double time_to_best_s = 0.0;
    long long iterations = 0;  // init counts as 1
    int restarts = 0;
    bool proven_optimal_at_init = false;
};

struct InitResult {
    std::vector<Tour> population;
    bool proven_optimal = false;
};

// Two Zhang patching variants plus N-2 locally optimized arbitrary-insertion
// tours. When the assignment relaxation already gives one cycle the population
// is short-circuited to that proven-optimal tour.
InitResult init_population(const AtspInstance& instance, const GaConfig& config,
                           std::mt19937_64& rng);

// Fittest of an explicit index sample; ties break toward the lowest index.
int best_of(const std::vector<Tour>& population, const std::vector<int>& sample);

// Samples s distinct indices uniformly (without replacement).
int tournament_select(const std::vector<Tour>& population, int s, std::mt19937_64& rng);

// Steady-state (tournament parents, unconditional worst replacement) or
// elitist-recombination (uniform parents, offspring vs worse parent) loop with
// the doubling restart rule. Stops on the wall clock, the iteration budget,
// a proven-optimal initialization, or on matching optimum_hint.
RunRecord run_ga(const AtspInstance& instance, const GaConfig& config,
                 std::optional<Cost> optimum_hint = std::nullopt);

}  // namespace atsp
