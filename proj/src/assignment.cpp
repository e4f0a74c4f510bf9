#include "atsp/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace atsp {

namespace {
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
}

// Shortest-augmenting-path Hungarian with row/column potentials. The diagonal
// cell of each row is skipped outright, so its value never enters the
// potentials. Columns are scanned ascending and compared strictly, which
// breaks every tie toward the lowest column index.
CycleCover solve_assignment(const AtspInstance& instance) {
    const int n = instance.n();
    std::vector<Cost> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            Cost delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (j != i0) {  // the diagonal cell of this row stays out of the potentials
                    const Cost cur = instance.cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (delta >= kInf) throw std::logic_error("assignment: no augmenting path");
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        for (int j1 = way[j0]; j0 != 0; j0 = j1, j1 = way[j0]) p[j0] = p[j1];
    }

    CycleCover cover;
    cover.succ.assign(n, -1);
    for (int j = 1; j <= n; ++j) cover.succ[p[j] - 1] = j - 1;
    cover.cost = 0;
    for (int i = 0; i < n; ++i) cover.cost += instance.cost(i, cover.succ[i]);
    cover.cycles = decompose_cycles(cover.succ);
    return cover;
}

std::vector<std::vector<int>> decompose_cycles(const std::vector<int>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<char> visited(n, 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int v = start;
        do {
            if (v < 0 || v >= n || visited[v])
                throw std::invalid_argument("succ is not a permutation");
            if (succ[v] == v) throw std::invalid_argument("fixed point at vertex " + std::to_string(v));
            visited[v] = 1;
            cycle.push_back(v);
            v = succ[v];
        } while (v != start);
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return cycles;
}

}  // namespace atsp
