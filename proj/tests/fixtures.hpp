#pragma once

#include <vector>

#include "atsp/instance.hpp"

// Tiny hand-checkable instances shared across the test suites. All vertex
// labels in the tests are 0-based.
namespace fixtures {

// Optimal tour [0,1,2,3] of length 25; the optimal assignment is that cycle.
inline atsp::AtspInstance m4() {
    return atsp::AtspInstance("m4", 4,
                              {
                                  0, 1, 2, 3,    //
                                  4, 0, 5, 6,    //
                                  7, 8, 0, 9,    //
                                  10, 11, 12, 0  //
                              });
}

// Optimal assignment splits into the 2-cycles (0,1) and (2,3) of cost 4;
// patching them costs 16 more, and 20 is the optimal tour length.
inline atsp::AtspInstance m4b() {
    return atsp::AtspInstance("m4b", 4,
                              {
                                  0, 1, 9, 9,  //
                                  1, 0, 9, 9,  //
                                  9, 9, 0, 1,  //
                                  9, 9, 1, 0   //
                              });
}

// Six unit arcs form the optimal tour 1->0->2->3->4->5->1 of length 6; two
// length-18 tours cover exactly that arc set between them.
inline atsp::AtspInstance m6() {
    std::vector<atsp::Cost> cost(36, 9);
    const auto set = [&](int from, int to, atsp::Cost c) { cost[from * 6 + to] = c; };
    for (int v = 0; v < 6; ++v) set(v, v, 0);
    set(1, 0, 1);
    set(0, 2, 1);
    set(2, 3, 1);
    set(3, 4, 1);
    set(4, 5, 1);
    set(5, 1, 1);
    set(0, 1, 5);
    set(1, 2, 5);
    set(5, 0, 5);
    set(2, 4, 5);
    set(4, 3, 5);
    set(3, 5, 5);
    return atsp::AtspInstance("m6", 6, std::move(cost));
}

// Unit-cost 2-cycles (0,1),(2,3),... among cost-9 arcs: the assignment
// relaxation is exactly those n/2 blocks, never a single cycle. n even.
inline atsp::AtspInstance blocks(int n) {
    std::vector<atsp::Cost> cost(static_cast<std::size_t>(n) * n, 9);
    for (int v = 0; v < n; ++v) {
        cost[static_cast<std::size_t>(v) * n + v] = 0;
        const int partner = v ^ 1;
        cost[static_cast<std::size_t>(v) * n + partner] = 1;
    }
    return atsp::AtspInstance("blocks" + std::to_string(n), n, std::move(cost));
}

// Unit-cost directed ring 0->1->...->n-1->0 among cost-9 arcs: the assignment
// relaxation is that single cycle, so construction proves optimality.
inline atsp::AtspInstance ring(int n) {
    std::vector<atsp::Cost> cost(static_cast<std::size_t>(n) * n, 9);
    for (int v = 0; v < n; ++v) {
        cost[static_cast<std::size_t>(v) * n + v] = 0;
        cost[static_cast<std::size_t>(v) * n + (v + 1) % n] = 1;
    }
    return atsp::AtspInstance("ring" + std::to_string(n), n, std::move(cost));
}

}  // namespace fixtures
