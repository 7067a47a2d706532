#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "errcode/graph.hpp"
#include "errcode/rational.hpp"

namespace errcode {

enum class CodeKind { IC, RED_IC, DET_IC, ERR_IC };

std::string_view to_string(CodeKind k);
// Accepts "ic", "red", "det", "err" and the full tags ("err_ic", "ERR:IC", ...).
CodeKind parse_code_kind(std::string_view s);

struct DominationFailure {
    Vertex v;
    int count;
    int required;
    friend bool operator==(const DominationFailure&, const DominationFailure&) = default;
};

struct DistinguishingFailure {
    Vertex u, v;       // u < v
    int symmetric;     // |N_S[u] xor N_S[v]|
    int u_only;        // |N_S[u] - N_S[v]|
    int v_only;        // |N_S[v] - N_S[u]|
    int required;
    friend bool operator==(const DistinguishingFailure&, const DistinguishingFailure&) = default;
};

struct VerificationReport {
    bool valid = true;
    std::vector<DominationFailure> domination_failures;
    std::vector<DistinguishingFailure> distinguishing_failures;
};

int domination_count(const Graph& g, const VertexSet& s, Vertex v);
int distinguishing_count(const Graph& g, const VertexSet& s, Vertex u, Vertex v);

// Checks every vertex and every unordered pair and reports all failures.
VerificationReport verify_code(const Graph& g, const VertexSet& s, CodeKind kind);

// Cheap yes/no form of verify_code(g, s, ERR_IC).valid.
bool is_errcode(const Graph& g, const VertexSet& s);

// sh(v) = sum over u in N[v] of 1 / |N[u] ∩ S|.
Rational share(const Graph& g, const VertexSet& s, Vertex v);

}  // namespace errcode
