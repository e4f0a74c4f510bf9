#include <doctest.h>

#include <stdexcept>

#include <random>

#include "atsp/tour.hpp"
#include "fixtures.hpp"

using namespace atsp;

TEST_CASE("tour_length on the fixtures") {
    const AtspInstance m4 = fixtures::m4();
    CHECK(tour_length(m4, {0, 1, 2, 3}) == 25);  // 1+5+9+10
    CHECK(tour_length(m4, {0, 3, 2, 1}) == 27);  // 3+12+8+4
    const AtspInstance m6 = fixtures::m6();
    CHECK(tour_length(m6, {1, 0, 2, 3, 4, 5}) == 6);
}

TEST_CASE("validate_and_build normalizes rotation") {
    const AtspInstance m4 = fixtures::m4();
    const Tour tour = validate_and_build(m4, {2, 3, 0, 1});
    CHECK(tour.order() == std::vector<int>{0, 1, 2, 3});
    CHECK(tour.length() == 25);
    CHECK(tour.pred_of(0) == 3);
    CHECK(tour.succ_of(3) == 0);
}

TEST_CASE("validate_and_build rejects broken orders") {
    const AtspInstance m4 = fixtures::m4();
    CHECK_THROWS_WITH_AS(validate_and_build(m4, {0, 1, 1, 3}), doctest::Contains("duplicate vertex 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_and_build(m4, {0, 1, 2}), doctest::Contains("wrong count"),
                         std::invalid_argument);
    CHECK_THROWS_AS(validate_and_build(m4, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("random_tour is deterministic per seed and always valid") {
    const AtspInstance m6 = fixtures::m6();
    const Tour a = random_tour(m6, 7);
    const Tour b = random_tour(m6, 7);
    CHECK(a == b);
    const Tour c = random_tour(m6, 3);
    CHECK(c.n() == 6);
    CHECK_NOTHROW(validate_and_build(m6, c.order()));
}

TEST_CASE("pred encoding reconstructs the same circuit") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const AtspInstance inst = generate_random_instance(4 + trial % 9, rng());
        const Tour tour = random_tour(inst, rng);
        const Tour rebuilt = tour_from_pred(inst, tour.pred());
        CHECK(rebuilt == tour);
        CHECK(rebuilt.length() == tour.length());
    }
}

TEST_CASE("rotation invariance of length and normalized order") {
    const AtspInstance m6 = fixtures::m6();
    const std::vector<int> base{3, 5, 0, 1, 2, 4};
    const Tour reference = validate_and_build(m6, base);
    for (std::size_t shift = 1; shift < base.size(); ++shift) {
        std::vector<int> rotated(base.begin() + shift, base.end());
        rotated.insert(rotated.end(), base.begin(), base.begin() + shift);
        const Tour tour = validate_and_build(m6, rotated);
        CHECK(tour == reference);
        CHECK(tour.length() == reference.length());
    }
}

TEST_CASE("tour_from_pred rejects subcycle predecessor maps") {
    const AtspInstance m4 = fixtures::m4();
    CHECK_THROWS_AS(tour_from_pred(m4, {1, 0, 3, 2}), std::invalid_argument);
}
