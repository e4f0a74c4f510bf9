#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "atsp/local_search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace atsp;

namespace {

// Any instance works for purely structural move checks.
AtspInstance structural(int n) { return fixtures::ring(n); }

Tour identity_tour(const AtspInstance& inst) {
    std::vector<int> order(inst.n());
    for (int i = 0; i < inst.n(); ++i) order[i] = i;
    return validate_and_build(inst, order);
}

}  // namespace

TEST_CASE("segment reversal, k=3 structural example") {
    const AtspInstance inst = structural(6);
    // 0->1->2->3->4->5->0, cuts {(1,2),(3,4),(5,0)} -> 0->1->4->5->2->3->0
    const Arc cuts[] = {{1, 2}, {3, 4}, {5, 0}};
    const Tour moved = apply_segment_reversal_move(inst, identity_tour(inst), cuts);
    CHECK(moved.order() == std::vector<int>{0, 1, 4, 5, 2, 3});
}

TEST_CASE("segment reversal, k=4 structural example") {
    const AtspInstance inst = structural(8);
    // cuts {(1,2),(3,4),(5,6),(7,0)} -> 0->1->6->7->4->5->2->3->0
    const Arc cuts[] = {{1, 2}, {3, 4}, {5, 6}, {7, 0}};
    const Tour moved = apply_segment_reversal_move(inst, identity_tour(inst), cuts);
    CHECK(moved.order() == std::vector<int>{0, 1, 6, 7, 4, 5, 2, 3});
}

TEST_CASE("segment reversal recomputes length on m4") {
    const AtspInstance m4 = fixtures::m4();
    const Tour start = validate_and_build(m4, {0, 3, 2, 1});
    const Arc cuts[] = {{0, 3}, {3, 2}, {2, 1}};
    const Tour moved = apply_segment_reversal_move(m4, start, cuts);
    CHECK(moved.order() == std::vector<int>{0, 2, 3, 1});
    CHECK(moved.length() == 26);  // c(0,2)+c(2,3)+c(3,1)+c(1,0)
    CHECK(moved.length() == start.length() - move_gain(m4, start, cuts));
}

TEST_CASE("segment reversal rejects bad cuts") {
    const AtspInstance inst = structural(6);
    const Tour tour = identity_tour(inst);
    const Arc not_an_arc[] = {{0, 2}, {3, 4}, {5, 0}};
    CHECK_THROWS_WITH_AS(apply_segment_reversal_move(inst, tour, not_an_arc),
                         doctest::Contains("not an arc"), std::invalid_argument);
    const Arc duplicate[] = {{1, 2}, {1, 2}, {5, 0}};
    CHECK_THROWS_WITH_AS(apply_segment_reversal_move(inst, tour, duplicate),
                         doctest::Contains("duplicate"), std::invalid_argument);
    const Arc wrong_k[] = {{1, 2}, {5, 0}};
    CHECK_THROWS_AS(apply_segment_reversal_move(inst, tour, wrong_k), std::invalid_argument);
}

TEST_CASE("moves change exactly k arcs and keep one Hamiltonian cycle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 20);
        const AtspInstance inst = generate_random_instance(n, rng());
        const Tour tour = random_tour(inst, rng);
        const int k = 3 + static_cast<int>(rng() % 2);

        std::set<int> tails;
        while (static_cast<int>(tails.size()) < k) tails.insert(static_cast<int>(rng() % n));
        std::vector<Arc> cuts;
        for (int tail : tails) cuts.push_back({tail, tour.succ_of(tail)});

        const Tour moved = apply_segment_reversal_move(inst, tour, cuts);
        CHECK(oracles::arc_difference(moved, tour) == k);
        CHECK(moved.length() == tour.length() - move_gain(inst, tour, cuts));
        // new adjacencies are disjoint from the cuts
        for (const auto& [tail, head] : cuts) CHECK(moved.succ_of(tail) != head);
    }
}

TEST_CASE("build_neighbor_lists sizes and contents") {
    const AtspInstance m4 = fixtures::m4();
    const NeighborLists lists = NeighborLists::build(m4);
    CHECK(lists.list_size() == 1);  // ceil(0.8) = 1
    CHECK(lists.of(0)[0] == 1);     // c(0,1)=1 is minimal
    CHECK(lists.of(3)[0] == 0);     // c(3,0)=10 < 11 < 12

    const NeighborLists ten = NeighborLists::build(generate_random_instance(10, 3));
    CHECK(ten.list_size() == 2);  // ceil(2) = 2

    const AtspInstance big = generate_random_instance(11, 4);
    const NeighborLists eleven = NeighborLists::build(big);
    CHECK(eleven.list_size() == 3);  // ceil(2.2) = 3
    for (int v = 0; v < 11; ++v) {
        const auto list = eleven.of(v);
        for (std::size_t i = 0; i + 1 < list.size(); ++i)
            CHECK(big.cost(v, list[i]) <= big.cost(v, list[i + 1]));
        for (int u : list) CHECK(u != v);
    }
}

TEST_CASE("three_opt_local_search leaves the m4 optimum alone") {
    const AtspInstance m4 = fixtures::m4();
    const NeighborLists lists = NeighborLists::build(m4);
    const Tour optimal = validate_and_build(m4, {0, 1, 2, 3});
    CHECK(three_opt_local_search(m4, lists, optimal) == optimal);

    const Tour worse = validate_and_build(m4, {0, 3, 2, 1});
    const Tour improved = three_opt_local_search(m4, lists, worse);
    CHECK(improved.length() <= worse.length());
    CHECK_NOTHROW(validate_and_build(m4, improved.order()));
}

TEST_CASE("three_opt_local_search is monotone and locally optimal in its subset") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 25);
        const AtspInstance inst = generate_random_instance(n, rng());
        const NeighborLists lists = NeighborLists::build(inst);
        const Tour start = random_tour(inst, rng);
        const Tour result = three_opt_local_search(inst, lists, start);
        CHECK(result.length() <= start.length());
        CHECK_NOTHROW(validate_and_build(inst, result.order()));
        CHECK(!oracles::has_improving_candidate_move(inst, lists, result));
    }
}
