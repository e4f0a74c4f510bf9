#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atsp {

using Cost = long long;

// Complete digraph with non-negative integer arc costs. The diagonal is
// structurally forbidden: cost(v, v) is not an arc and is never read as a
// cost, whatever sentinel the input file carried there.
class AtspInstance {
public:
    AtspInstance(std::string name, int n, std::vector<Cost> row_major);

    const std::string& name() const { return name_; }
    int n() const { return n_; }

    Cost cost(int from, int to) const {
        assert(from != to && "diagonal is not an arc");
        return cost_[static_cast<std::size_t>(from) * n_ + to];
    }

    // Sum of all n(n-1) off-diagonal costs; c_aver == off_diagonal_sum / arc_count.
    Cost off_diagonal_sum() const { return off_diag_sum_; }
    long long arc_count() const { return static_cast<long long>(n_) * (n_ - 1); }
    double c_aver() const { return static_cast<double>(off_diag_sum_) / static_cast<double>(arc_count()); }

private:
    std::string name_;
    int n_ = 0;
    std::vector<Cost> cost_;
    Cost off_diag_sum_ = 0;
};

// TSPLIB ATSP reader: TYPE ATSP, EDGE_WEIGHT_TYPE EXPLICIT, FULL_MATRIX.
// Throws std::runtime_error on malformed input.
AtspInstance parse_tsplib_atsp(std::istream& in);
AtspInstance parse_tsplib_atsp_file(const std::string& path);

// Canonical TSPLIB writer for the subset parse_tsplib_atsp accepts.
void write_tsplib_atsp(std::ostream& out, const AtspInstance& instance);

// Off-diagonal costs uniform in [1,100]; deterministic per seed. n >= 3.
AtspInstance generate_random_instance(int n, std::uint64_t seed);

// Known optimal tour lengths keyed by instance name.
class OptimaRegistry {
public:
    void insert(const std::string& name, Cost optimum);
    std::optional<Cost> find(const std::string& name) const;
    std::size_t size() const { return optima_.size(); }

private:
    std::map<std::string, Cost> optima_;
};

// One "name optimum" pair per line, '#' starts a comment.
OptimaRegistry load_optima_registry(std::istream& in);
OptimaRegistry load_optima_registry_file(const std::string& path);

}  // namespace atsp
