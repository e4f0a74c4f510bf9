#include "atsp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace atsp {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

AtspInstance::AtspInstance(std::string name, int n, std::vector<Cost> row_major)
    : name_(std::move(name)), n_(n), cost_(std::move(row_major)) {
    if (n_ < 2) fail("instance needs at least 2 vertices");
    if (cost_.size() != static_cast<std::size_t>(n_) * n_) fail("cost table size mismatch");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i != j && cost_[static_cast<std::size_t>(i) * n_ + j] < 0)
                fail("negative weight at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    off_diag_sum_ = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) off_diag_sum_ += cost_[static_cast<std::size_t>(i) * n_ + j];
}

AtspInstance parse_tsplib_atsp(std::istream& in) {
    static const std::set<std::string> kKnownKeys = {
        "NAME", "TYPE", "COMMENT", "DIMENSION", "EDGE_WEIGHT_TYPE", "EDGE_WEIGHT_FORMAT",
    };

    std::map<std::string, std::string> header;
    std::string line;
    bool in_section = false;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EDGE_WEIGHT_SECTION") {
            in_section = true;
            break;
        }
        if (t == "EOF") break;
        const auto colon = t.find(':');
        if (colon == std::string::npos) fail("malformed header line: " + t);
        const std::string key = trim(t.substr(0, colon));
        const std::string value = trim(t.substr(colon + 1));
        if (!kKnownKeys.count(key)) fail("unsupported header key: " + key);
        if (header.count(key)) fail("duplicate header key: " + key);
        header[key] = value;
    }
    if (!in_section) fail("missing EDGE_WEIGHT_SECTION");

    for (const char* required : {"TYPE", "DIMENSION", "EDGE_WEIGHT_TYPE", "EDGE_WEIGHT_FORMAT"})
        if (!header.count(required)) fail(std::string("missing header key: ") + required);

    if (header["TYPE"] != "ATSP") fail("unsupported TYPE: " + header["TYPE"]);
    if (header["EDGE_WEIGHT_TYPE"] != "EXPLICIT")
        fail("unsupported EDGE_WEIGHT_TYPE: " + header["EDGE_WEIGHT_TYPE"]);
    if (header["EDGE_WEIGHT_FORMAT"] != "FULL_MATRIX")
        fail("unsupported EDGE_WEIGHT_FORMAT: " + header["EDGE_WEIGHT_FORMAT"]);

    int n = 0;
    try {
        n = std::stoi(header["DIMENSION"]);
    } catch (const std::exception&) {
        fail("malformed DIMENSION: " + header["DIMENSION"]);
    }
    if (n < 2) fail("DIMENSION must be at least 2");

    const long long expected = static_cast<long long>(n) * n;
    std::vector<Cost> weights;
    weights.reserve(expected);
    std::string token;
    while (in >> token) {
        if (token == "EOF") break;
        Cost value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(token, &used);
            if (used != token.size()) fail("malformed weight token: " + token);
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception&) {
            fail("malformed weight token: " + token);
        }
        weights.push_back(value);
        if (static_cast<long long>(weights.size()) > expected)
            fail("token count mismatch: more than " + std::to_string(expected) + " weights");
    }
    if (static_cast<long long>(weights.size()) != expected)
        fail("token count mismatch: expected " + std::to_string(expected) + " weights, got " +
             std::to_string(weights.size()));

    std::string name = header.count("NAME") ? header["NAME"] : "unnamed";
    return AtspInstance(std::move(name), n, std::move(weights));
}

AtspInstance parse_tsplib_atsp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return parse_tsplib_atsp(in);
}

void write_tsplib_atsp(std::ostream& out, const AtspInstance& instance) {
    const int n = instance.n();
    out << "NAME: " << instance.name() << "\n"
        << "TYPE: ATSP\n"
        << "DIMENSION: " << n << "\n"
        << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out << (i == j ? 9999 : instance.cost(i, j));
            out << (j + 1 == n ? '\n' : ' ');
        }
    }
    out << "EOF\n";
}

AtspInstance generate_random_instance(int n, std::uint64_t seed) {
    if (n < 3) fail("generate_random_instance needs n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Cost> dist(1, 100);
    std::vector<Cost> cost(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cost[static_cast<std::size_t>(i) * n + j] = dist(rng);
    return AtspInstance("random-n" + std::to_string(n) + "-s" + std::to_string(seed), n,
                        std::move(cost));
}

void OptimaRegistry::insert(const std::string& name, Cost optimum) {
    if (optimum <= 0) fail("optimum for " + name + " must be positive");
    if (optima_.count(name)) fail("duplicate registry entry: " + name);
    optima_[name] = optimum;
}

std::optional<Cost> OptimaRegistry::find(const std::string& name) const {
    const auto it = optima_.find(name);
    if (it == optima_.end()) return std::nullopt;
    return it->second;
}

OptimaRegistry load_optima_registry(std::istream& in) {
    OptimaRegistry registry;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream row(t);
        std::string name;
        long long optimum = 0;
        if (!(row >> name >> optimum)) fail("malformed registry line " + std::to_string(line_no));
        std::string extra;
        if (row >> extra) fail("malformed registry line " + std::to_string(line_no));
        registry.insert(name, optimum);
    }
    return registry;
}

OptimaRegistry load_optima_registry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return load_optima_registry(in);
}

}  // namespace atsp
