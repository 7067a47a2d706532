#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "errcode/graph.hpp"

namespace errcode {

enum class SolveMethod { oracle, branch_and_bound, complement_search };

std::string_view to_string(SolveMethod m);

struct OptimalCode {
    VertexSet detectors;
    int size = 0;
    SolveMethod method = SolveMethod::branch_and_bound;
    std::int64_t nodes_explored = 0;
};

struct SolverOptions {
    int threads = 1;
    std::int64_t node_budget = 0;  // 0 = unlimited
};

// Thrown when the node budget runs out; carries the bounds known so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, int lower, int upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    int lower_bound;
    int upper_bound;  // -1 when no solution was found yet
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleCap = 20;

// Subsets by increasing size, each size in lexicographic order; the first
// valid ERR:IC wins. NONE when V itself is not an ERR:IC.
std::optional<OptimalCode> min_errcode_oracle(const Graph& g, int max_n = kOracleCap);

// Exact branch-and-bound with constraint propagation. Returns the
// lexicographically smallest minimum ERR:IC, identical for every thread count.
std::optional<OptimalCode> min_errcode(const Graph& g, const SolverOptions& opts = {});

// Detectors forced before any branching: every domination/distinguishing
// requirement whose candidate set has exactly the slack it needs.
// NONE when propagation alone proves that no ERR:IC exists.
std::optional<VertexSet> root_forced_detectors(const Graph& g);

struct RivalQuadruple {
    Vertex p, q;                 // rivals: opposite corners of the 4-cycle p a q b
    Vertex p_friend, q_friend;   // from N(p) - {a,b} and N(q) - {a,b}
    Vertex a, b;
    friend bool operator==(const RivalQuadruple&, const RivalQuadruple&) = default;
};

std::vector<RivalQuadruple> find_rivals(const Graph& g);

// Throws PreconditionError (naming the witness) unless g is cubic, twin-free
// and triangle-free.
void require_cubic_code_graph(const Graph& g);

// Non-detector conditions for cubic graphs: pairwise distance >= 4 and at
// most one friend of every rival pair.
bool nondetector_conditions_hold(const Graph& g, const VertexSet& nondetectors);

// Maximum non-detector set on a qualifying cubic graph, returned as the
// lexicographically smallest minimum code.
OptimalCode max_nondetectors_cubic(const Graph& g, const SolverOptions& opts = {});

struct LemmaViolation {
    enum class Kind { ball3, four_cycle } kind;
    std::vector<Vertex> witness;
};

// On cubic graphs, checks that every non-detector v has B_3(v) - {v} inside
// the code, and that every 4-cycle with four distinct outside neighbours
// keeps at least 7 of those 8 vertices. Empty for non-cubic graphs.
std::vector<LemmaViolation> cubic_lemma_violations(const Graph& g, const VertexSet& code);

}  // namespace errcode
