#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace errcode {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_regular(int k) const;
    // Returns k if every vertex has degree k, -1 otherwise (and for n = 0).
    int regular_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

// Sorts, dedups and range-checks a list of ids for g.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> ids);
VertexSet complement(const Graph& g, const VertexSet& s);

// Edge-list text: first line "n m", then m lines "u v". Errors carry line numbers.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

class Distance {
public:
    static Distance infinite() { return Distance(); }
    explicit Distance(int d) : d_(d) {}

    bool is_infinite() const { return d_ < 0; }
    // Throws std::logic_error when infinite.
    int value() const;

    friend bool operator==(const Distance&, const Distance&) = default;
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);
    friend bool operator<(const Distance& a, int b) { return !a.is_infinite() && a.d_ < b; }
    friend bool operator<=(const Distance& a, int b) { return !a.is_infinite() && a.d_ <= b; }

private:
    Distance() = default;
    int d_ = -1;
};

Distance distance(const Graph& g, Vertex u, Vertex v);
// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex src);
// All-pairs BFS, -1 for unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);
// Largest finite distance; INFINITE when disconnected.
Distance diameter(const Graph& g);

VertexSet ball(const Graph& g, Vertex v, int r);

enum class TwinKind { open, closed };

struct Twin {
    Vertex u;
    Vertex v;
    TwinKind kind;
    friend bool operator==(const Twin&, const Twin&) = default;
};

std::vector<Twin> find_twins(const Graph& g);

struct Triangle {
    Vertex a, b, c;  // a < b < c
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

std::vector<Triangle> find_triangles(const Graph& g);

inline constexpr int kCanonicalCap = 10;

struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    static CanonicalForm from_hex(std::string_view hex);
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Exact canonical labeling, throws GraphError when g.n() > kCanonicalCap.
CanonicalForm canonical_form(const Graph& g);
Graph from_canonical_form(const CanonicalForm& cf);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Label-free fingerprint usable for non-isomorphism checks beyond the cap:
// sorted per-vertex distance histograms.
std::vector<std::vector<int>> distance_profile(const Graph& g);

// Simple k-regular graph from the pairing model, restarting on loops or
// multi-edges. Deterministic per seed across platforms.
Graph random_regular(int n, int k, std::uint64_t seed, int max_attempts = 100000);

// Erdos-Renyi G(n, p), deterministic per seed.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace errcode
