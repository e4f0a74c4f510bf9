#pragma once

#include <utility>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/tour.hpp"

namespace atsp {

// One alternating component: the vertices whose predecessor differs between
// the parents and whose choices are tied together by propagation. Selecting
// the component means taking every vertex's predecessor from the same parent.
struct OrpComponent {
    std::vector<int> vertices;
    Cost p1_cost = 0;  // total cost of the choose-p1 arc bundle
    Cost p2_cost = 0;
};

// Constraint set of the optimal recombination problem for two parents:
// offspring must contain every arc common to both and no arc absent from both.
struct OrpInstance {
    std::vector<Arc> forced;  // arcs present in both parents
    Cost forced_cost = 0;
    std::vector<OrpComponent> components;
    std::vector<int> pred1, pred2;
    Cost p1_length = 0, p2_length = 0;

    int m() const { return static_cast<int>(components.size()); }
};

struct OrpSolution {
    Tour tour;
    bool optimal = false;  // false only when the node budget ran out
    long long nodes_explored = 0;
};

inline constexpr long long kDefaultOrpNodeBudget = 1LL << 20;

// Intersects the parent arc sets and closes the symmetric difference under
// "choosing an arc forces the rest of its alternating component".
OrpInstance build_orp_instance(const AtspInstance& instance, const Tour& p1, const Tour& p2);

// Exact branch over the 2^m component assignments with subcycle pruning and
// cost bounding seeded by the better parent. Always returns a tour at least as
// good as both parents; optimal=false only on budget exhaustion.
OrpSolution solve_orp(const AtspInstance& instance, const OrpInstance& orp,
                      long long node_budget = kDefaultOrpNodeBudget);

// Verification oracle: enumerates every per-vertex predecessor choice (2^d,
// d = differing vertices <= 20) and keeps the Hamiltonian ones.
Tour brute_force_orp(const AtspInstance& instance, const Tour& p1, const Tour& p2);

struct HeldKarpResult {
    Cost length = 0;
    Tour tour;
};

// Exact subset dynamic program; n <= 18.
HeldKarpResult held_karp(const AtspInstance& instance);

}  // namespace atsp
