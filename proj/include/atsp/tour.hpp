#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "atsp/instance.hpp"

namespace atsp {

using Arc = std::pair<int, int>;  // (tail, head)

// Hamiltonian circuit in dual encoding: visiting order (rotated so that
// order[0] == 0) plus predecessor/successor arrays. Immutable value; equality
// is rotation-insensitive because of the normalization.
class Tour {
public:
    Tour() = default;  // empty placeholder; real tours come from the builders below

    const std::vector<int>& order() const { return order_; }
    const std::vector<int>& pred() const { return pred_; }
    int n() const { return static_cast<int>(order_.size()); }
    Cost length() const { return length_; }

    int pred_of(int v) const { return pred_[v]; }
    int succ_of(int v) const { return succ_[v]; }

    bool operator==(const Tour& other) const { return order_ == other.order_; }

private:
    friend Tour validate_and_build(const AtspInstance&, const std::vector<int>&);
    friend Tour tour_from_pred(const AtspInstance&, const std::vector<int>&);

    std::vector<int> order_, pred_, succ_;
    Cost length_ = 0;
};

// Total cost of the circuit visiting `order` (with wrap-around arc).
Cost tour_length(const AtspInstance& instance, const std::vector<int>& order);

// Checks that `order` is a permutation of 0..n-1 and builds the dual encoding.
Tour validate_and_build(const AtspInstance& instance, const std::vector<int>& order);

// Builds a Tour from a predecessor array; throws unless it encodes one
// Hamiltonian cycle.
Tour tour_from_pred(const AtspInstance& instance, const std::vector<int>& pred);

// Uniformly random permutation, deterministic per seed.
Tour random_tour(const AtspInstance& instance, std::uint64_t seed);
Tour random_tour(const AtspInstance& instance, std::mt19937_64& rng);

}  // namespace atsp
