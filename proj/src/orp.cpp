#include "atsp/orp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace atsp {

OrpInstance build_orp_instance(const AtspInstance& instance, const Tour& p1, const Tour& p2) {
    const int n = instance.n();
    if (p1.n() != n || p2.n() != n)
        throw std::invalid_argument("parents and instance disagree on vertex count");

    OrpInstance orp;
    orp.pred1 = p1.pred();
    orp.pred2 = p2.pred();
    orp.p1_length = p1.length();
    orp.p2_length = p2.length();

    std::vector<char> differs(n, 0);
    for (int v = 0; v < n; ++v) {
        if (orp.pred1[v] == orp.pred2[v]) {
            orp.forced.push_back({orp.pred1[v], v});
            orp.forced_cost += instance.cost(orp.pred1[v], v);
        } else {
            differs[v] = 1;
        }
    }

    // Choosing p1's arc into v pins down p1's arc into succ2(pred1(v)) as
    // well: the shared tail loses its p2 alternative. That consequence map is
    // a permutation of the differing vertices; its orbits are the alternating
    // components, each a single all-p1/all-p2 decision.
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (!differs[start] || seen[start]) continue;
        OrpComponent comp;
        int v = start;
        do {
            seen[v] = 1;
            comp.vertices.push_back(v);
            comp.p1_cost += instance.cost(orp.pred1[v], v);
            comp.p2_cost += instance.cost(orp.pred2[v], v);
            v = p2.succ_of(orp.pred1[v]);
            if (!differs[v] || (seen[v] && v != start))
                throw std::logic_error("alternating-component propagation left the differing set");
        } while (v != start);
        orp.components.push_back(std::move(comp));
    }
    return orp;
}

namespace {

// Partial selections are unions of vertex-disjoint directed paths. Only path
// endpoints carry valid entries: pe[x] is the opposite endpoint of x's path.
struct PathTracker {
    std::vector<int> pe, succ_sel, pred_sel;
    int arcs = 0;
    int n;

    struct Undo {
        int a, pe_a, b, pe_b, u, v;
    };
    std::vector<Undo> trail;

    explicit PathTracker(int n_) : pe(n_), succ_sel(n_, -1), pred_sel(n_, -1), n(n_) {
        std::iota(pe.begin(), pe.end(), 0);
    }

    // Adds arc (u,v) unless it violates degrees or closes a cycle shorter
    // than n. On rejection the state is unchanged.
    bool add(int u, int v) {
        if (succ_sel[u] != -1 || pred_sel[v] != -1) return false;
        const int a = pe[u];
        const int b = pe[v];
        if (a == v) {
            if (arcs + 1 != n) return false;  // would close a subcycle
            trail.push_back({-1, 0, -1, 0, u, v});
        } else {
            trail.push_back({a, pe[a], b, pe[b], u, v});
            pe[a] = b;
            pe[b] = a;
        }
        succ_sel[u] = v;
        pred_sel[v] = u;
        ++arcs;
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const Undo s = trail.back();
            trail.pop_back();
            succ_sel[s.u] = -1;
            pred_sel[s.v] = -1;
            --arcs;
            if (s.a != -1) {
                pe[s.a] = s.pe_a;
                pe[s.b] = s.pe_b;
            }
        }
    }
};

struct OrpSearch {
    const OrpInstance& orp;
    PathTracker paths;
    std::vector<Cost> suffix_min;
    std::vector<int> current_pred;

    long long budget;
    long long nodes = 0;
    bool exhausted = false;

    Cost incumbent_cost;
    std::vector<int> incumbent_pred;

    OrpSearch(const OrpInstance& o, int n, long long node_budget)
        : orp(o), paths(n), current_pred(n, -1), budget(node_budget) {
        suffix_min.assign(orp.m() + 1, 0);
        for (int i = orp.m() - 1; i >= 0; --i)
            suffix_min[i] =
                suffix_min[i + 1] + std::min(orp.components[i].p1_cost, orp.components[i].p2_cost);
    }

    void dfs(int idx, Cost cost_so_far) {
        if (exhausted) return;
        if (idx == orp.m()) {
            if (cost_so_far < incumbent_cost) {
                incumbent_cost = cost_so_far;
                incumbent_pred = current_pred;
            }
            return;
        }
        if (cost_so_far + suffix_min[idx] >= incumbent_cost) return;

        const OrpComponent& comp = orp.components[idx];
        const bool p1_first = comp.p1_cost <= comp.p2_cost;
        for (int attempt = 0; attempt < 2 && !exhausted; ++attempt) {
            const bool use_p1 = (attempt == 0) == p1_first;
            const std::vector<int>& pred = use_p1 ? orp.pred1 : orp.pred2;
            if (++nodes > budget) {
                exhausted = true;
                return;
            }
            const std::size_t mark = paths.trail.size();
            bool feasible = true;
            for (int v : comp.vertices) {
                if (!paths.add(pred[v], v)) {
                    feasible = false;
                    break;
                }
                current_pred[v] = pred[v];
            }
            if (feasible) dfs(idx + 1, cost_so_far + (use_p1 ? comp.p1_cost : comp.p2_cost));
            paths.undo_to(mark);
        }
    }
};

}  // namespace

OrpSolution solve_orp(const AtspInstance& instance, const OrpInstance& orp, long long node_budget) {
    const int n = instance.n();
    OrpSearch search(orp, n, node_budget);

    for (const auto& [u, v] : orp.forced) {
        search.current_pred[v] = u;
        if (!search.paths.add(u, v))
            throw std::logic_error("forced arcs of distinct parents closed a subcycle");
    }

    // Seed with the better parent so even an exhausted search stays elitist.
    const bool p1_seed = orp.p1_length <= orp.p2_length;
    search.incumbent_cost = p1_seed ? orp.p1_length : orp.p2_length;
    search.incumbent_pred = p1_seed ? orp.pred1 : orp.pred2;

    if (orp.m() > 0) search.dfs(0, orp.forced_cost);

    return OrpSolution{
        .tour = tour_from_pred(instance, search.incumbent_pred),
        .optimal = !search.exhausted,
        .nodes_explored = search.nodes,
    };
}

Tour brute_force_orp(const AtspInstance& instance, const Tour& p1, const Tour& p2) {
    const int n = instance.n();
    if (p1.n() != n || p2.n() != n)
        throw std::invalid_argument("parents and instance disagree on vertex count");

    std::vector<int> differing;
    for (int v = 0; v < n; ++v)
        if (p1.pred_of(v) != p2.pred_of(v)) differing.push_back(v);
    const int d = static_cast<int>(differing.size());
    if (d > 20) throw std::invalid_argument("brute_force_orp limited to 20 differing vertices");

    std::vector<int> pred = p1.pred();
    std::vector<char> tail_used(n, 0);
    Cost best_cost = std::numeric_limits<Cost>::max();
    std::vector<int> best_pred;

    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        for (int i = 0; i < d; ++i) {
            const int v = differing[i];
            pred[v] = (mask >> i) & 1u ? p2.pred_of(v) : p1.pred_of(v);
        }
        // keep only selections whose predecessor map is a permutation...
        std::fill(tail_used.begin(), tail_used.end(), 0);
        bool valid = true;
        for (int v = 0; v < n && valid; ++v) {
            if (tail_used[pred[v]]) valid = false;
            tail_used[pred[v]] = 1;
        }
        if (!valid) continue;
        // ...forming a single Hamiltonian cycle.
        int v = 0, steps = 0;
        do {
            v = pred[v];
            ++steps;
        } while (v != 0 && steps <= n);
        if (steps != n) continue;

        Cost cost = 0;
        for (int w = 0; w < n; ++w) cost += instance.cost(pred[w], w);
        if (cost < best_cost) {
            best_cost = cost;
            best_pred = pred;
        }
    }
    return tour_from_pred(instance, best_pred);
}

HeldKarpResult held_karp(const AtspInstance& instance) {
    const int n = instance.n();
    if (n > 18) throw std::invalid_argument("held_karp limited to n <= 18");

    if (n == 2) {
        return {instance.cost(0, 1) + instance.cost(1, 0), validate_and_build(instance, {0, 1})};
    }

    const int m = n - 1;  // vertices 1..n-1; tours start and end at 0
    const std::size_t full = std::size_t{1} << m;
    constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
    std::vector<Cost> dp(full * m, kInf);
    std::vector<std::int8_t> parent(full * m, -1);

    for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = instance.cost(0, j + 1);

    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < m; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const Cost base = dp[mask * m + j];
            if (base >= kInf) continue;
            for (int k = 0; k < m; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                const std::size_t next = mask | (std::size_t{1} << k);
                const Cost cand = base + instance.cost(j + 1, k + 1);
                if (cand < dp[next * m + k]) {
                    dp[next * m + k] = cand;
                    parent[next * m + k] = static_cast<std::int8_t>(j);
                }
            }
        }
    }

    Cost best = kInf;
    int last = -1;
    for (int j = 0; j < m; ++j) {
        const Cost cand = dp[(full - 1) * m + j] + instance.cost(j + 1, 0);
        if (cand < best) {
            best = cand;
            last = j;
        }
    }

    std::vector<int> order;
    order.reserve(n);
    std::size_t mask = full - 1;
    for (int j = last; j != -1;) {
        order.push_back(j + 1);
        const int prev = static_cast<int>(parent[mask * m + j]);
        mask &= ~(std::size_t{1} << j);
        j = prev;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    return {best, validate_and_build(instance, order)};
}

}  // namespace atsp
