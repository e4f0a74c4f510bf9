#include "atsp/ga.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "atsp/construction.hpp"
#include "atsp/local_search.hpp"
#include "atsp/variation.hpp"

namespace atsp {

namespace {

void validate(const GaConfig& config) {
    if (config.population < 2) throw std::invalid_argument("population must be >= 2");
    if (config.tournament < 1 || config.tournament > config.population)
        throw std::invalid_argument("tournament size must be in [1, population]");
    if (config.p_mut < 0.0 || config.p_mut > 1.0)
        throw std::invalid_argument("p_mut must be in [0,1]");
    if (config.time_limit_s <= 0.0 && config.max_iterations <= 0)
        throw std::invalid_argument("need a time limit or an iteration budget");
}

std::vector<Tour> fill_population(const AtspInstance& instance, const NeighborLists& neighbors,
                                  const GaConfig& config, std::mt19937_64& rng, const Tour& zhang1,
                                  const Tour& zhang2) {
    std::vector<Tour> population{zhang1, zhang2};
    population.reserve(config.population);
    for (int i = 2; i < config.population; ++i)
        population.push_back(
            three_opt_local_search(instance, neighbors, arbitrary_insertion(instance, rng)));
    return population;
}

}  // namespace

InitResult init_population(const AtspInstance& instance, const GaConfig& config,
                           std::mt19937_64& rng) {
    validate(config);
    const ConstructionResult zhang1 = zhang_construct(instance, PatchVariant::MaxCycleSink);
    if (zhang1.proven_optimal) return {{zhang1.tour}, true};
    const ConstructionResult zhang2 = zhang_construct(instance, PatchVariant::ShortestFirst);
    const NeighborLists neighbors = NeighborLists::build(instance);
    return {fill_population(instance, neighbors, config, rng, zhang1.tour, zhang2.tour), false};
}

int best_of(const std::vector<Tour>& population, const std::vector<int>& sample) {
    int best = -1;
    for (int idx : sample) {
        if (idx < 0 || idx >= static_cast<int>(population.size()))
            throw std::invalid_argument("sample index out of range");
        if (best == -1 || population[idx].length() < population[best].length() ||
            (population[idx].length() == population[best].length() && idx < best))
            best = idx;
    }
    if (best == -1) throw std::invalid_argument("empty sample");
    return best;
}

int tournament_select(const std::vector<Tour>& population, int s, std::mt19937_64& rng) {
    const int n = static_cast<int>(population.size());
    if (s < 1 || s > n) throw std::invalid_argument("tournament size must be in [1, population]");
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    std::vector<int> sample(s);
    for (int i = 0; i < s; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(indices[i], indices[pick(rng)]);
        sample[i] = indices[i];
    }
    return best_of(population, sample);
}

RunRecord run_ga(const AtspInstance& instance, const GaConfig& config,
                 std::optional<Cost> optimum_hint) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const auto elapsed_s = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };
    std::mt19937_64 rng(config.seed);

    RunRecord record;
    Cost global_best = std::numeric_limits<Cost>::max();
    const auto consider = [&](const Tour& tour) {
        if (tour.length() < global_best) {
            global_best = tour.length();
            record.best = tour;
            record.time_to_best_s = elapsed_s();
        }
    };

    const ConstructionResult zhang1 = zhang_construct(instance, PatchVariant::MaxCycleSink);
    if (zhang1.proven_optimal) {
        consider(zhang1.tour);
        record.best_length = global_best;
        record.init_best_length = global_best;
        record.iterations = 1;
        record.proven_optimal_at_init = true;
        return record;
    }
    const ConstructionResult zhang2 = zhang_construct(instance, PatchVariant::ShortestFirst);
    const NeighborLists neighbors = NeighborLists::build(instance);
    const MutationConfig mutation{config.p_mut};
    const long long t_min = config.t_min > 0 ? config.t_min : 2LL * config.population;

    long long step_iterations = 0;
    bool done = false;
    bool first_segment = true;
    while (!done) {
        // (Re)initialization: the deterministic Zhang pair is reused, fresh
        // randomness enters through the N-2 insertion tours.
        std::vector<Tour> population =
            fill_population(instance, neighbors, config, rng, zhang1.tour, zhang2.tour);
        long long t = 1;
        long long t_best = 1;
        Cost segment_best = std::numeric_limits<Cost>::max();
        for (const Tour& tour : population) {
            if (tour.length() < segment_best) segment_best = tour.length();
            consider(tour);
        }
        if (first_segment) {
            record.init_best_length = segment_best;
            first_segment = false;
        }

        while (true) {
            if (optimum_hint && global_best == *optimum_hint) {
                done = true;
                break;
            }
            if (config.max_iterations > 0 && step_iterations >= config.max_iterations) {
                done = true;
                break;
            }
            if (config.time_limit_s > 0.0 && elapsed_s() >= config.time_limit_s) {
                done = true;
                break;
            }

            const auto make_offspring = [&](int i1, int i2) {
                const Tour c1 = maybe_mutate(instance, population[i1], mutation, rng);
                const Tour c2 = maybe_mutate(instance, population[i2], mutation, rng);
                return config.crossover == Crossover::ODEC ? odec_crossover(instance, c1, c2)
                                                           : dec_crossover(instance, c1, c2, rng);
            };

            Tour offspring;
            if (config.strategy == Strategy::SteadyState) {
                const int i1 = tournament_select(population, config.tournament, rng);
                const int i2 = tournament_select(population, config.tournament, rng);
                offspring = make_offspring(i1, i2);
                int worst = 0;
                for (int i = 1; i < static_cast<int>(population.size()); ++i)
                    if (population[i].length() > population[worst].length()) worst = i;
                population[worst] = offspring;  // unconditional
            } else {
                // Elitist recombination: uniform distinct parents, offspring
                // competes within the family.
                const int n_pop = static_cast<int>(population.size());
                const int i1 = std::uniform_int_distribution<int>(0, n_pop - 1)(rng);
                int i2 = std::uniform_int_distribution<int>(0, n_pop - 2)(rng);
                if (i2 >= i1) ++i2;
                offspring = make_offspring(i1, i2);
                const int worse = population[i1].length() > population[i2].length() ? i1 : i2;
                if (offspring.length() < population[worse].length()) population[worse] = offspring;
            }

            consider(offspring);
            ++t;
            ++step_iterations;
            if (offspring.length() < segment_best) {
                segment_best = offspring.length();
                t_best = t;
            }

            if (config.observer) config.observer(population);

            if (config.restarts && t >= std::max(2 * t_best, t_min)) {
                ++record.restarts;
                break;  // reinitialize
            }
        }
    }

    record.best_length = global_best;
    record.iterations = 1 + step_iterations;
    return record;
}

}  // namespace atsp
