#include "atsp/local_search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace atsp {

NeighborLists NeighborLists::build(const AtspInstance& instance) {
    const int n = instance.n();
    const int k = std::min((n + 4) / 5, n - 1);  // ceil(0.2 n), capped at n-1

    NeighborLists lists;
    lists.k_ = k;
    lists.flat_.resize(static_cast<std::size_t>(n) * k);

    std::vector<int> candidates(n - 1);
    for (int v = 0; v < n; ++v) {
        int idx = 0;
        for (int u = 0; u < n; ++u)
            if (u != v) candidates[idx++] = u;
        std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end(),
                          [&](int a, int b) {
                              const Cost ca = instance.cost(v, a), cb = instance.cost(v, b);
                              return ca != cb ? ca < cb : a < b;
                          });
        std::copy(candidates.begin(), candidates.begin() + k,
                  lists.flat_.begin() + static_cast<std::size_t>(v) * k);
    }
    return lists;
}

namespace {

// Cut positions sorted along the tour, validated against it.
std::vector<int> sorted_cut_positions(const Tour& tour, std::span<const Arc> cuts) {
    if (cuts.size() != 3 && cuts.size() != 4)
        throw std::invalid_argument("segment reversal move needs 3 or 4 cuts");
    const auto& order = tour.order();
    const int n = tour.n();
    std::vector<int> pos_of(n);
    for (int i = 0; i < n; ++i) pos_of[order[i]] = i;

    std::vector<int> positions;
    positions.reserve(cuts.size());
    for (const auto& [tail, head] : cuts) {
        if (tail < 0 || tail >= n || tour.succ_of(tail) != head)
            throw std::invalid_argument("cut (" + std::to_string(tail) + "," + std::to_string(head) +
                                        ") is not an arc of the tour");
        positions.push_back(pos_of[tail]);
    }
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw std::invalid_argument("duplicate cut");
    return positions;
}

}  // namespace

Tour apply_segment_reversal_move(const AtspInstance& instance, const Tour& tour,
                                 std::span<const Arc> cuts) {
    const std::vector<int> positions = sorted_cut_positions(tour, cuts);
    const auto& order = tour.order();
    const int n = tour.n();
    const int k = static_cast<int>(positions.size());

    // Segment i runs from the head of cut i to the tail of cut i+1; emit the
    // segments in reversed cyclic order, each one kept intact.
    std::vector<int> new_order;
    new_order.reserve(n);
    for (int i = k - 1; i >= 0; --i) {
        const int from = (positions[i] + 1) % n;  // head of cut i
        const int to = positions[(i + 1) % k];    // tail of cut i+1
        for (int p = from; ; p = (p + 1) % n) {
            new_order.push_back(order[p]);
            if (p == to) break;
        }
    }
    return validate_and_build(instance, new_order);
}

Cost move_gain(const AtspInstance& instance, const Tour& tour, std::span<const Arc> cuts) {
    const std::vector<int> positions = sorted_cut_positions(tour, cuts);
    const auto& order = tour.order();
    const int n = tour.n();
    const int k = static_cast<int>(positions.size());

    Cost removed = 0, added = 0;
    for (int i = 0; i < k; ++i) {
        const int tail = order[positions[i]];
        const int head = order[(positions[i] + 1) % n];
        removed += instance.cost(tail, head);
        const int new_tail = order[positions[(i + 1) % k]];
        const int new_head = order[(positions[(i + k - 1) % k] + 1) % n];
        added += instance.cost(new_tail, new_head);
    }
    return removed - added;
}

std::pair<int, Cost> best_third_cut(const AtspInstance& instance, const std::vector<int>& order,
                                    const std::vector<int>& pos, int v1, int v3) {
    const int n = static_cast<int>(order.size());
    const auto succ = [&](int v) { return order[(pos[v] + 1) % n]; };
    const auto pred = [&](int v) { return order[(pos[v] + n - 1) % n]; };

    const int v2 = succ(v1);
    const int v4 = pred(v3);
    const Cost fixed_part = instance.cost(v1, v2) + instance.cost(v4, v3) - instance.cost(v1, v3);

    int best_v6 = -1;
    Cost best_gain = std::numeric_limits<Cost>::min();
    for (int v6 = v3; v6 != v1; v6 = succ(v6)) {
        const int v5 = succ(v6);
        const Cost gain =
            fixed_part + instance.cost(v6, v5) - instance.cost(v6, v2) - instance.cost(v4, v5);
        if (gain > best_gain) {  // ties keep the earliest arc on the segment
            best_gain = gain;
            best_v6 = v6;
        }
    }
    return {best_v6, best_gain};
}

namespace {

struct SearchState {
    Tour tour;
    std::vector<int> order, pos;

    explicit SearchState(Tour t) : tour(std::move(t)) { refresh(); }

    void refresh() {
        order = tour.order();
        pos.resize(order.size());
        for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    }
};

// First improving candidate arc (v1,v3) in neighbor-list order, best third cut
// for each candidate. Applies the move and clears the endpoints' bits.
bool try_improve_from(const AtspInstance& instance, const NeighborLists& neighbors,
                      SearchState& state, std::vector<char>& dont_look, int v1) {
    const int v2 = state.tour.succ_of(v1);
    const Cost limit = instance.cost(v1, v2);
    for (int u : neighbors.of(v1)) {
        if (instance.cost(v1, u) >= limit) break;  // list is ascending; rest is no closer
        if (u == v2) continue;
        const auto [v6, gain] = best_third_cut(instance, state.order, state.pos, v1, u);
        if (gain > 0) {
            const int v4 = state.tour.pred_of(u);
            const int v5 = state.tour.succ_of(v6);
            const Arc cuts[3] = {{v1, v2}, {v4, u}, {v6, v5}};
            state.tour = apply_segment_reversal_move(instance, state.tour, cuts);
            state.refresh();
            for (int endpoint : {v1, v2, u, v4, v5, v6}) dont_look[endpoint] = 0;
            return true;
        }
    }
    return false;
}

// One scan over the tour arcs in decreasing cost order. Returns true as soon
// as a move was applied; marks fruitless origins when honoring the bits.
bool run_pass(const AtspInstance& instance, const NeighborLists& neighbors, SearchState& state,
              std::vector<char>& dont_look, bool honor_bits) {
    const int n = state.tour.n();
    std::vector<int> tails(n);
    std::iota(tails.begin(), tails.end(), 0);
    std::sort(tails.begin(), tails.end(), [&](int a, int b) {
        const Cost ca = instance.cost(a, state.tour.succ_of(a));
        const Cost cb = instance.cost(b, state.tour.succ_of(b));
        return ca != cb ? ca > cb : a < b;
    });
    for (int v1 : tails) {
        if (honor_bits && dont_look[v1]) continue;
        if (try_improve_from(instance, neighbors, state, dont_look, v1)) return true;
        dont_look[v1] = 1;
    }
    return false;
}

}  // namespace

Tour three_opt_local_search(const AtspInstance& instance, const NeighborLists& neighbors,
                            Tour tour) {
    SearchState state(std::move(tour));
    std::vector<char> dont_look(state.tour.n(), 0);
    while (true) {
        if (run_pass(instance, neighbors, state, dont_look, /*honor_bits=*/true)) continue;
        // Quiescent under don't-look bits; a stale bit may still mask a move,
        // so confirm with one unrestricted scan before stopping.
        if (!run_pass(instance, neighbors, state, dont_look, /*honor_bits=*/false)) break;
    }
    return state.tour;
}

}  // namespace atsp
