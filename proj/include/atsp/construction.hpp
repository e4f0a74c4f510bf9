#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/tour.hpp"

namespace atsp {

enum class PatchVariant {
    MaxCycleSink,   // patch every remaining cycle into a largest one
    ShortestFirst,  // repeatedly merge the two smallest cycles
};

struct ConstructionResult {
    Tour tour;
    bool proven_optimal = false;  // assignment solution was a single cycle
    Cost assignment_cost = 0;
    Cost patch_delta_total = 0;  // tour.length() == assignment_cost + patch_delta_total
};

struct PatchResult {
    std::vector<int> merged;
    Cost delta = 0;
};

// Merges two vertex-disjoint cycles by swapping one arc of each for the two
// cross arcs minimizing delta = c(a,d)+c(c,b)-c(a,b)-c(c,d); ties break toward
// the smallest (a,c).
PatchResult patch_two_cycles(const AtspInstance& instance,
                             const std::vector<int>& c1,
                             const std::vector<int>& c2);

// Assignment relaxation plus cycle patching. A single-cycle assignment is the
// optimal tour and sets proven_optimal.
ConstructionResult zhang_construct(const AtspInstance& instance, PatchVariant variant);

// Grows a tour from a random 2-cycle, inserting uniformly chosen vertices at
// their cheapest position. Deterministic per seed.
Tour arbitrary_insertion(const AtspInstance& instance, std::uint64_t seed);
Tour arbitrary_insertion(const AtspInstance& instance, std::mt19937_64& rng);

// Deterministic core: explicit start pair and insertion sequence of the
// remaining n-2 vertices.
Tour arbitrary_insertion_sequence(const AtspInstance& instance, int first, int second,
                                  std::span<const int> insert_seq);

}  // namespace atsp
