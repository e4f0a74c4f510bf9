#pragma once

#include <span>
#include <utility>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/tour.hpp"

namespace atsp {

// Per-vertex list of the ceil(0.2 n) nearest successors by outgoing cost,
// ascending.
class NeighborLists {
public:
    static NeighborLists build(const AtspInstance& instance);

    std::span<const int> of(int v) const {
        return {flat_.data() + static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_)};
    }
    int list_size() const { return k_; }

private:
    int k_ = 0;
    std::vector<int> flat_;
};

// Removes k in {3,4} arcs of the tour and revisits the resulting segments in
// reversed cyclic order, every segment keeping its internal direction. The
// result differs from the input in exactly k arcs. Cuts may be given in any
// order; they must be distinct arcs of the tour.
Tour apply_segment_reversal_move(const AtspInstance& instance, const Tour& tour,
                                 std::span<const Arc> cuts);

// Removed cost minus added cost of the same move; length(new) == length(old) - gain.
Cost move_gain(const AtspInstance& instance, const Tour& tour, std::span<const Arc> cuts);

// Best third cut (v6, succ(v6)) on the tour segment from v3 to v1 for the
// 3-change that removes (v1, succ(v1)) and (pred(v3), v3). Returns {v6, gain},
// gain maximized, ties toward the earliest arc on the segment.
std::pair<int, Cost> best_third_cut(const AtspInstance& instance,
                                    const std::vector<int>& order, const std::vector<int>& pos,
                                    int v1, int v3);

// Directed 3-opt descent over the truncated-neighbor-list candidate subset,
// with don't-look bits and first-improvement scanning. The returned tour
// admits no improving move in that subset.
Tour three_opt_local_search(const AtspInstance& instance, const NeighborLists& neighbors,
                            Tour tour);

}  // namespace atsp
