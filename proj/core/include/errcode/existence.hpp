#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "errcode/graph.hpp"

namespace errcode {

// i: twin-free, ii: min degree >= 2, iii: no adjacent degree-2 vertices,
// iv: every triangle pair is 3-distinguished by closed neighbourhoods.
enum class ExistenceProperty { twins, min_degree, adjacent_degree2, triangle };

std::string_view to_string(ExistenceProperty p);

struct TriangleWitness {
    Triangle triangle;
    Vertex u, v;   // the offending pair within the triangle
    int symmetric; // |N[u] xor N[v]|
};

struct ExistenceReport {
    bool exists = true;
    std::vector<ExistenceProperty> failed_properties;
    std::vector<Twin> twin_witnesses;
    std::vector<Vertex> low_degree_witnesses;
    std::vector<Edge> adjacent_degree2_witnesses;
    std::vector<TriangleWitness> triangle_witnesses;
    // Which criterion produced the verdict: "general", "triangle-free",
    // "cubic" or "regular".
    std::string criterion = "general";
};

ExistenceReport check_existence(const Graph& g);

// Uses the reduced criterion for triangle-free, cubic and k-regular inputs;
// the verdict always equals check_existence(g).exists.
ExistenceReport check_existence_special(const Graph& g);

inline constexpr int kEnumerationCap = 7;

// Canonical forms (sorted) of every isomorphism class on at most n_max
// vertices that admits an ERR:IC. threads <= 0 picks hardware concurrency.
std::vector<CanonicalForm> enumerate_admitting_graphs(int n_max, int threads = 1);

}  // namespace errcode
