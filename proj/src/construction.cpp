#include "atsp/construction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "atsp/assignment.hpp"

namespace atsp {

PatchResult patch_two_cycles(const AtspInstance& instance, const std::vector<int>& c1,
                             const std::vector<int>& c2) {
    if (c1.size() < 2 || c2.size() < 2) throw std::invalid_argument("cycles need >= 2 vertices");
    for (int v : c1)
        if (std::find(c2.begin(), c2.end(), v) != c2.end())
            throw std::invalid_argument("cycles overlap at vertex " + std::to_string(v));

    const auto arc_at = [](const std::vector<int>& c, std::size_t i) {
        return Arc{c[i], c[(i + 1) % c.size()]};
    };

    Cost best_delta = std::numeric_limits<Cost>::max();
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        const auto [a, b] = arc_at(c1, i);
        for (std::size_t j = 0; j < c2.size(); ++j) {
            const auto [c, d] = arc_at(c2, j);
            const Cost delta =
                instance.cost(a, d) + instance.cost(c, b) - instance.cost(a, b) - instance.cost(c, d);
            const bool better =
                delta < best_delta ||
                (delta == best_delta &&
                 std::pair{a, c} < std::pair{c1[best_i], c2[best_j]});
            if (better) {
                best_delta = delta;
                best_i = i;
                best_j = j;
            }
        }
    }

    // Merged circuit: b ... a, then a->d, d ... c, then c->b.
    PatchResult result;
    result.delta = best_delta;
    result.merged.reserve(c1.size() + c2.size());
    for (std::size_t i = 1; i <= c1.size(); ++i) result.merged.push_back(c1[(best_i + i) % c1.size()]);
    for (std::size_t j = 1; j <= c2.size(); ++j) result.merged.push_back(c2[(best_j + j) % c2.size()]);
    return result;
}

ConstructionResult zhang_construct(const AtspInstance& instance, PatchVariant variant) {
    if (instance.n() < 3) throw std::invalid_argument("zhang_construct needs n >= 3");
    const CycleCover cover = solve_assignment(instance);

    ConstructionResult result{
        .tour = Tour{},
        .proven_optimal = cover.cycles.size() == 1,
        .assignment_cost = cover.cost,
        .patch_delta_total = 0,
    };
    if (result.proven_optimal) {
        result.tour = validate_and_build(instance, cover.cycles.front());
        return result;
    }

    // cover.cycles is already ascending by (size, smallest vertex).
    std::vector<std::vector<int>> cycles = cover.cycles;
    if (variant == PatchVariant::MaxCycleSink) {
        // The designated sink is a largest cycle; break size ties toward the
        // smallest lead vertex, i.e. the first largest one in sorted order.
        std::size_t sink = 0;
        for (std::size_t i = 1; i < cycles.size(); ++i)
            if (cycles[i].size() > cycles[sink].size()) sink = i;
        std::vector<int> merged = std::move(cycles[sink]);
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(sink));
        for (const auto& cycle : cycles) {
            PatchResult patch = patch_two_cycles(instance, merged, cycle);
            merged = std::move(patch.merged);
            result.patch_delta_total += patch.delta;
        }
        result.tour = validate_and_build(instance, merged);
    } else {
        const auto by_size_then_lead = [](const std::vector<int>& a, const std::vector<int>& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        };
        while (cycles.size() > 1) {
            std::sort(cycles.begin(), cycles.end(), by_size_then_lead);
            PatchResult patch = patch_two_cycles(instance, cycles[0], cycles[1]);
            result.patch_delta_total += patch.delta;
            cycles.erase(cycles.begin(), cycles.begin() + 2);
            cycles.push_back(std::move(patch.merged));
        }
        result.tour = validate_and_build(instance, cycles.front());
    }
    return result;
}

Tour arbitrary_insertion_sequence(const AtspInstance& instance, int first, int second,
                                  std::span<const int> insert_seq) {
    const int n = instance.n();
    if (n < 3) throw std::invalid_argument("arbitrary_insertion needs n >= 3");
    if (first == second) throw std::invalid_argument("start vertices must differ");
    if (static_cast<int>(insert_seq.size()) != n - 2)
        throw std::invalid_argument("insertion sequence must cover the remaining n-2 vertices");

    std::vector<int> cycle{first, second};
    cycle.reserve(n);
    for (int v : insert_seq) {
        Cost best = std::numeric_limits<Cost>::max();
        std::size_t best_pos = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            const int b = cycle[(i + 1) % cycle.size()];
            const Cost delta = instance.cost(a, v) + instance.cost(v, b) - instance.cost(a, b);
            if (delta < best) {  // ties keep the earliest position
                best = delta;
                best_pos = i;
            }
        }
        cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1, v);
    }
    return validate_and_build(instance, cycle);
}

Tour arbitrary_insertion(const AtspInstance& instance, std::mt19937_64& rng) {
    const int n = instance.n();
    if (n < 3) throw std::invalid_argument("arbitrary_insertion needs n >= 3");
    std::uniform_int_distribution<int> pick_first(0, n - 1);
    const int first = pick_first(rng);
    std::uniform_int_distribution<int> pick_offset(1, n - 1);
    const int second = (first + pick_offset(rng)) % n;

    std::vector<int> remaining;
    remaining.reserve(n - 2);
    for (int v = 0; v < n; ++v)
        if (v != first && v != second) remaining.push_back(v);
    std::shuffle(remaining.begin(), remaining.end(), rng);
    return arbitrary_insertion_sequence(instance, first, second, remaining);
}

Tour arbitrary_insertion(const AtspInstance& instance, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return arbitrary_insertion(instance, rng);
}

}  // namespace atsp
