#pragma once

#include <vector>

#include "atsp/instance.hpp"

namespace atsp {

// Optimal solution of the Assignment Problem relaxation, decomposed into
// vertex-disjoint cycles. succ has no fixed point (the diagonal is excluded),
// and cost is a lower bound on every tour length.
struct CycleCover {
    std::vector<int> succ;
    Cost cost = 0;
    std::vector<std::vector<int>> cycles;  // ascending (size, smallest vertex)
};

// Exact Hungarian solve with the diagonal excluded from the search (no big-M).
// Deterministic: column ties during augmentation break toward the lowest index.
CycleCover solve_assignment(const AtspInstance& instance);

// Splits a fixed-point-free permutation into cycles; each cycle starts at its
// smallest vertex and the list is sorted by (size, smallest vertex).
std::vector<std::vector<int>> decompose_cycles(const std::vector<int>& succ);

}  // namespace atsp
