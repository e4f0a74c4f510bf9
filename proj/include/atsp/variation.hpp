#pragma once

#include <random>

#include "atsp/instance.hpp"
#include "atsp/orp.hpp"
#include "atsp/tour.hpp"

namespace atsp {

struct MutationConfig {
    double p_mut = 0.1;  // probability a parent copy is mutated at all
};

// Selection score for the 3-change target arc (v, u): the removed-arc cost
// plus the closed cycle's arc count weighted by the mean arc cost.
inline double mutation_f_score(Cost removed_arc_cost, int cycle_arc_count, double c_aver) {
    return static_cast<double>(removed_arc_cost) + cycle_arc_count * c_aver;
}

// Random jump in the directed 3-opt neighborhood: random first cut, second cut
// drawn from the top half of candidates by F score, best third cut on the
// closed cycle. Not a descent; the gain may be negative. n >= 5.
Tour mutate_3change(const AtspInstance& instance, const Tour& tour, std::mt19937_64& rng);

// Random jump in the 4-opt neighborhood: two random non-adjacent cuts, the
// remaining pair chosen exhaustively for the most favorable quad change. n >= 8.
Tour mutate_quad_change(const AtspInstance& instance, const Tour& tour, std::mt19937_64& rng);

// Coin-flips p_mut, then applies one of the two operators with equal
// probability. Falls back to the 3-change when n < 8 and leaves tours of
// n < 5 untouched.
Tour maybe_mutate(const AtspInstance& instance, const Tour& tour, const MutationConfig& config,
                  std::mt19937_64& rng);

// Exact optimal recombination: the shortest tour that keeps all common parent
// arcs and uses no arc absent from both parents. Never worse than either parent.
Tour odec_crossover(const AtspInstance& instance, const Tour& p1, const Tour& p2,
                    long long node_budget = kDefaultOrpNodeBudget);

// Randomized prototype: greedy walk over unused parent arcs with
// cheapest-arc repair. Gene transmission is not guaranteed. repairs_out, when
// given, receives the number of repair arcs taken.
Tour dec_crossover(const AtspInstance& instance, const Tour& p1, const Tour& p2,
                   std::mt19937_64& rng, int* repairs_out = nullptr);

}  // namespace atsp
