#include "atsp/variation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "atsp/local_search.hpp"

namespace atsp {

Tour mutate_3change(const AtspInstance& instance, const Tour& tour, std::mt19937_64& rng) {
    const int n = tour.n();
    if (n < 5) throw std::invalid_argument("mutate_3change needs n >= 5");

    const auto& order = tour.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::uniform_int_distribution<int> pick_arc(0, n - 1);
    const int v1 = order[pick_arc(rng)];
    const int v2 = tour.succ_of(v1);

    // Rank every candidate head u by F(u) = c(pred(u), u) + |C(u)| * c_aver,
    // descending. Costs are integers, so compare F scaled by n(n-1) exactly.
    const Cost arc_count = instance.arc_count();
    const Cost cost_sum = instance.off_diagonal_sum();
    struct Candidate {
        int u;
        Cost f_scaled;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(n - 2);
    for (int u = 0; u < n; ++u) {
        if (u == v1 || u == v2) continue;
        const int cycle_arcs = (pos[v1] - pos[u] + n) % n + 1;
        const Cost f_scaled = instance.cost(tour.pred_of(u), u) * arc_count + cycle_arcs * cost_sum;
        candidates.push_back({u, f_scaled});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return a.f_scaled != b.f_scaled ? a.f_scaled > b.f_scaled : a.u < b.u;
    });

    const int top = (static_cast<int>(candidates.size()) + 1) / 2;
    std::uniform_int_distribution<int> pick_candidate(0, top - 1);
    const int v3 = candidates[pick_candidate(rng)].u;

    const auto [v6, gain] = best_third_cut(instance, order, pos, v1, v3);
    (void)gain;  // a mutation jumps regardless of sign
    const int v4 = tour.pred_of(v3);
    const int v5 = tour.succ_of(v6);
    const Arc cuts[3] = {{v1, v2}, {v4, v3}, {v6, v5}};
    return apply_segment_reversal_move(instance, tour, cuts);
}

Tour mutate_quad_change(const AtspInstance& instance, const Tour& tour, std::mt19937_64& rng) {
    const int n = tour.n();
    if (n < 8) throw std::invalid_argument("mutate_quad_change needs n >= 8");

    const auto& order = tour.order();
    std::uniform_int_distribution<int> pick_arc(0, n - 1);
    const int i = pick_arc(rng);
    // Keep the cut arcs non-adjacent so both open paths have an arc to cut.
    std::uniform_int_distribution<int> pick_offset(2, n - 2);
    const int j = (i + pick_offset(rng)) % n;

    const auto arc = [&](int p) { return Arc{order[p % n], order[(p + 1) % n]}; };
    const auto [v1, v2] = arc(i);
    const auto [v7, v8] = arc(j);
    const Cost constant = instance.cost(v1, v2) + instance.cost(v7, v8) - instance.cost(v7, v2) -
                          instance.cost(v1, v8);

    const int p_count = (j - i + n) % n - 1;  // arcs strictly inside path v2..v7
    const int q_count = (i - j + n) % n - 1;  // arcs strictly inside path v8..v1
    Cost best_gain = std::numeric_limits<Cost>::min();
    int best_p = -1, best_q = -1;
    for (int dp = 1; dp <= p_count; ++dp) {
        const auto [a, a_next] = arc(i + dp);
        for (int dq = 1; dq <= q_count; ++dq) {
            const auto [b, b_next] = arc(j + dq);
            const Cost gain = constant + instance.cost(a, a_next) + instance.cost(b, b_next) -
                              instance.cost(a, b_next) - instance.cost(b, a_next);
            if (gain > best_gain) {
                best_gain = gain;
                best_p = (i + dp) % n;
                best_q = (j + dq) % n;
            }
        }
    }

    const Arc cuts[4] = {arc(i), arc(best_p), arc(j), arc(best_q)};
    return apply_segment_reversal_move(instance, tour, cuts);
}

Tour maybe_mutate(const AtspInstance& instance, const Tour& tour, const MutationConfig& config,
                  std::mt19937_64& rng) {
    const int n = tour.n();
    if (n < 5) return tour;  // no non-degenerate jump exists
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) >= config.p_mut) return tour;
    if (n < 8) return mutate_3change(instance, tour, rng);
    return coin(rng) < 0.5 ? mutate_3change(instance, tour, rng)
                           : mutate_quad_change(instance, tour, rng);
}

Tour odec_crossover(const AtspInstance& instance, const Tour& p1, const Tour& p2,
                    long long node_budget) {
    return solve_orp(instance, build_orp_instance(instance, p1, p2), node_budget).tour;
}

Tour dec_crossover(const AtspInstance& instance, const Tour& p1, const Tour& p2,
                   std::mt19937_64& rng, int* repairs_out) {
    const int n = instance.n();
    if (p1.n() != n || p2.n() != n)
        throw std::invalid_argument("parents and instance disagree on vertex count");

    std::uniform_int_distribution<int> pick_start(0, n - 1);
    std::vector<int> path{pick_start(rng)};
    path.reserve(n);
    std::vector<char> visited(n, 0);
    visited[path[0]] = 1;
    int repairs = 0;

    while (static_cast<int>(path.size()) < n) {
        const int w = path.back();
        int candidates[2];
        int count = 0;
        for (int t : {p1.succ_of(w), p2.succ_of(w)})
            if (!visited[t] && (count == 0 || candidates[0] != t)) candidates[count++] = t;

        int next;
        if (count == 2) {
            next = candidates[std::uniform_int_distribution<int>(0, 1)(rng)];
        } else if (count == 1) {
            next = candidates[0];
        } else {
            // no usable parent arc; repair with the cheapest arc to any
            // unvisited vertex
            next = -1;
            for (int x = 0; x < n; ++x)
                if (!visited[x] && (next == -1 || instance.cost(w, x) < instance.cost(w, next)))
                    next = x;
            ++repairs;
        }
        visited[next] = 1;
        path.push_back(next);
    }
    // the closing arc is forced; it counts as a repair when no parent has it
    const int last = path.back();
    if (p1.succ_of(last) != path.front() && p2.succ_of(last) != path.front()) ++repairs;
    if (repairs_out) *repairs_out = repairs;
    return validate_and_build(instance, path);
}

}  // namespace atsp
