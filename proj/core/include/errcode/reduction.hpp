#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcode/graph.hpp"
#include "errcode/solver.hpp"

namespace errcode {

class FormulaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Literal {
    int var;        // 1-based
    bool positive;
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

// Throws FormulaError on repeated variables or out-of-range ids.
void validate(const Formula& f);

// DIMACS CNF with exactly three distinct-variable literals per clause.
Formula parse_dimacs(std::string_view text);
std::string format_dimacs(const Formula& f);

// Per-variable block of 10 ids and per-clause block of 8 ids.
inline constexpr int kVarBlock = 10;
inline constexpr int kClauseBlock = 8;

// Offsets inside a variable block.
namespace var_offset {
inline constexpr int x = 0, x_bar = 1, y = 2, z = 3;
}
// Offsets inside a clause block.
namespace clause_offset {
inline constexpr int c = 0, d = 1;
}

struct ReductionInstance {
    Graph graph;
    int K = 0;
    std::vector<std::pair<Vertex, Vertex>> literal_map;  // [var-1] -> (x_i, x̄_i)
    std::vector<std::vector<Vertex>> variable_blocks;
    std::vector<std::vector<Vertex>> clause_blocks;
    VertexSet forced_detectors;
};

// Variables that appear in no clause leave x_i and x̄_i distinguished by only
// two vertices, so the instance then admits no ERR:IC at all.
ReductionInstance build_reduction(const Formula& f);

bool satisfies(const Formula& f, const std::vector<bool>& assignment);

inline constexpr int kSatBruteforceCap = 24;

// First satisfying assignment with x_1 as the most significant bit and
// false before true; NONE when unsatisfiable.
std::optional<std::vector<bool>> sat_bruteforce(const Formula& f);

// The K-detector code selecting x_i or x̄_i per the assignment.
VertexSet encode_assignment(const ReductionInstance& inst, const std::vector<bool>& assignment);

// Throws std::invalid_argument if the code is not a valid ERR:IC of size K
// or picks both/neither literal for some variable.
std::vector<bool> decode_assignment(const ReductionInstance& inst, const VertexSet& code);

struct RoundtripReport {
    bool sat = false;
    std::optional<int> min_size;  // NONE when the instance has no ERR:IC
    int K = 0;
    bool agrees = false;
    std::optional<std::vector<bool>> decoded;
};

RoundtripReport roundtrip_check(const Formula& f, const SolverOptions& opts = {});

nlohmann::json reduction_side_file(const ReductionInstance& inst);

}  // namespace errcode
