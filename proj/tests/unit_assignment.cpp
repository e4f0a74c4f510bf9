#include <doctest.h>

#include <stdexcept>

#include <random>

#include "atsp/assignment.hpp"
#include "atsp/orp.hpp"
#include "atsp/tour.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace atsp;

TEST_CASE("solve_assignment on m4: single optimal cycle") {
    const CycleCover cover = solve_assignment(fixtures::m4());
    CHECK(cover.cost == 25);
    CHECK(cover.succ == std::vector<int>{1, 2, 3, 0});
    REQUIRE(cover.cycles.size() == 1);
    CHECK(cover.cycles[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("solve_assignment on m4b: two 2-cycles") {
    const CycleCover cover = solve_assignment(fixtures::m4b());
    CHECK(cover.cost == 4);
    REQUIRE(cover.cycles.size() == 2);
    CHECK(cover.cycles[0] == std::vector<int>{0, 1});
    CHECK(cover.cycles[1] == std::vector<int>{2, 3});
}

TEST_CASE("solve_assignment matches the derangement oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);  // up to 8
        const AtspInstance inst = generate_random_instance(n, rng());
        const CycleCover cover = solve_assignment(inst);
        CHECK(cover.cost == oracles::enumerate_optimal_assignment_cost(inst));

        Cost recomputed = 0;
        for (int v = 0; v < n; ++v) {
            CHECK(cover.succ[v] != v);
            recomputed += inst.cost(v, cover.succ[v]);
        }
        CHECK(recomputed == cover.cost);
    }
}

TEST_CASE("assignment cost lower-bounds tours") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const AtspInstance inst = generate_random_instance(n, rng());
        const CycleCover cover = solve_assignment(inst);
        for (int k = 0; k < 5; ++k) CHECK(cover.cost <= random_tour(inst, rng).length());
        CHECK(cover.cost <= held_karp(inst).length);
    }
}

TEST_CASE("decompose_cycles canonical form") {
    CHECK(decompose_cycles({1, 0, 3, 2}) ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(decompose_cycles({1, 2, 3, 0}) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    // sorted by (size, smallest vertex)
    CHECK(decompose_cycles({1, 0, 3, 4, 2}) ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
    CHECK_THROWS_WITH_AS(decompose_cycles({0, 2, 1}), doctest::Contains("fixed point"),
                         std::invalid_argument);
}
