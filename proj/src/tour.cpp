#include "atsp/tour.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace atsp {

Cost tour_length(const AtspInstance& instance, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    Cost total = 0;
    for (int i = 0; i < n; ++i) total += instance.cost(order[i], order[(i + 1) % n]);
    return total;
}

Tour validate_and_build(const AtspInstance& instance, const std::vector<int>& order) {
    const int n = instance.n();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("wrong count: expected " + std::to_string(n) + " vertices, got " +
                                    std::to_string(order.size()));
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
        seen[v] = 1;
    }

    Tour tour;
    tour.order_.resize(n);
    const auto start = std::find(order.begin(), order.end(), 0);
    std::rotate_copy(order.begin(), start, order.end(), tour.order_.begin());

    tour.pred_.resize(n);
    tour.succ_.resize(n);
    for (int i = 0; i < n; ++i) {
        const int from = tour.order_[i];
        const int to = tour.order_[(i + 1) % n];
        tour.succ_[from] = to;
        tour.pred_[to] = from;
    }
    tour.length_ = tour_length(instance, tour.order_);
    return tour;
}

Tour tour_from_pred(const AtspInstance& instance, const std::vector<int>& pred) {
    const int n = instance.n();
    if (static_cast<int>(pred.size()) != n) throw std::invalid_argument("pred array size mismatch");
    std::vector<int> order(n);
    int v = 0;
    for (int i = 0; i < n; ++i) {
        order[n - 1 - i] = v;  // walking predecessors yields the reverse visiting order
        v = pred[v];
        if (v < 0 || v >= n) throw std::invalid_argument("pred value out of range");
    }
    if (v != 0) throw std::invalid_argument("pred array is not a single cycle");
    std::rotate(order.begin(), std::find(order.begin(), order.end(), 0), order.end());
    return validate_and_build(instance, order);
}

Tour random_tour(const AtspInstance& instance, std::mt19937_64& rng) {
    std::vector<int> order(instance.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return validate_and_build(instance, order);
}

Tour random_tour(const AtspInstance& instance, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_tour(instance, rng);
}

}  // namespace atsp
