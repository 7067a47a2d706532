#include <algorithm>

#include <fmt/format.h>

#include "errcode/graph.hpp"
#include "errcode/rng.hpp"

namespace errcode {

Graph random_regular(int n, int k, std::uint64_t seed, int max_attempts) {
    if (n < 0 || k < 0 || (static_cast<long long>(n) * k) % 2 != 0 || (n > 0 && k >= n))
        throw GraphError(fmt::format("random_regular: infeasible parameters n={} k={}", n, k));
    Rng rng(seed);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i) points.push_back(v);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        rng.shuffle(points);
        std::vector<Edge> edges;
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        bool ok = true;
        for (std::size_t i = 0; i < points.size(); i += 2) {
            Vertex u = points[i], v = points[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (ok) return Graph(n, edges);
    }
    throw GraphError(fmt::format("random_regular: no simple graph after {} attempts", max_attempts));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace errcode
