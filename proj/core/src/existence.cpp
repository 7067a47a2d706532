#include "errcode/existence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>

namespace errcode {

std::string_view to_string(ExistenceProperty p) {
    switch (p) {
        case ExistenceProperty::twins: return "i:twins";
        case ExistenceProperty::min_degree: return "ii:min-degree";
        case ExistenceProperty::adjacent_degree2: return "iii:adjacent-degree-2";
        case ExistenceProperty::triangle: return "iv:triangle-condition";
    }
    return "?";
}

namespace {

int closed_symmetric_difference(const Graph& g, Vertex u, Vertex v) {
    auto a = closed_neighborhood(g, u);
    auto b = closed_neighborhood(g, v);
    std::vector<Vertex> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    return static_cast<int>(d.size());
}

void collect_twins(const Graph& g, ExistenceReport& r) {
    r.twin_witnesses = find_twins(g);
    if (!r.twin_witnesses.empty()) r.failed_properties.push_back(ExistenceProperty::twins);
}

void collect_min_degree(const Graph& g, ExistenceReport& r) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) < 2) r.low_degree_witnesses.push_back(v);
    if (!r.low_degree_witnesses.empty()) r.failed_properties.push_back(ExistenceProperty::min_degree);
}

void collect_adjacent_degree2(const Graph& g, ExistenceReport& r) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 2 && g.degree(v) == 2) r.adjacent_degree2_witnesses.emplace_back(u, v);
    if (!r.adjacent_degree2_witnesses.empty()) r.failed_properties.push_back(ExistenceProperty::adjacent_degree2);
}

void collect_triangles(const Graph& g, ExistenceReport& r, bool every_triangle_fails) {
    for (const auto& t : find_triangles(g)) {
        const Edge pairs[3] = {{t.a, t.b}, {t.a, t.c}, {t.b, t.c}};
        for (auto [u, v] : pairs) {
            int d = closed_symmetric_difference(g, u, v);
            if (every_triangle_fails || d < 3) {
                r.triangle_witnesses.push_back({t, u, v, d});
                if (every_triangle_fails) break;
            }
        }
    }
    if (!r.triangle_witnesses.empty()) r.failed_properties.push_back(ExistenceProperty::triangle);
}

void finish(ExistenceReport& r) { r.exists = r.failed_properties.empty(); }

}  // namespace

ExistenceReport check_existence(const Graph& g) {
    ExistenceReport r;
    collect_twins(g, r);
    collect_min_degree(g, r);
    collect_adjacent_degree2(g, r);
    collect_triangles(g, r, false);
    finish(r);
    return r;
}

ExistenceReport check_existence_special(const Graph& g) {
    const int k = g.regular_degree();
    if (k == 3) {
        // Cubic: twin-free and triangle-free.
        ExistenceReport r;
        r.criterion = "cubic";
        collect_twins(g, r);
        collect_triangles(g, r, true);
        finish(r);
        return r;
    }
    if (k >= 0) {
        // k-regular: k >= 3, twin-free, triangle pairs 3-distinguished.
        ExistenceReport r;
        r.criterion = "regular";
        if (k < 2) {
            for (Vertex v = 0; v < g.n(); ++v) r.low_degree_witnesses.push_back(v);
            r.failed_properties.push_back(ExistenceProperty::min_degree);
        } else if (k == 2) {
            for (auto e : g.edges()) r.adjacent_degree2_witnesses.push_back(e);
            r.failed_properties.push_back(ExistenceProperty::adjacent_degree2);
        }
        collect_twins(g, r);
        if (k >= 3) collect_triangles(g, r, false);
        finish(r);
        return r;
    }
    if (find_triangles(g).empty()) {
        ExistenceReport r;
        r.criterion = "triangle-free";
        collect_twins(g, r);
        collect_min_degree(g, r);
        collect_adjacent_degree2(g, r);
        finish(r);
        return r;
    }
    return check_existence(g);
}

namespace {

// Bitmask form of the four properties for n <= 8, used to filter labeled
// graphs before a Graph is ever allocated.
bool admits_bitmask(int n, const std::uint8_t* adj) {
    for (int v = 0; v < n; ++v) {
        int d = std::popcount(adj[v]);
        if (d < 2) return false;
        if (d == 2)
            for (int w = 0; w < n; ++w)
                if (((adj[v] >> w) & 1) && std::popcount(adj[w]) == 2) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint8_t cu = adj[u] | static_cast<std::uint8_t>(1u << u);
            std::uint8_t cv = adj[v] | static_cast<std::uint8_t>(1u << v);
            if (adj[u] == adj[v] || cu == cv) return false;
            if ((adj[u] >> v) & 1) {
                std::uint8_t common = adj[u] & adj[v];
                if (common != 0 && std::popcount(static_cast<unsigned>(cu ^ cv)) < 3) return false;
            }
        }
    return true;
}

}  // namespace

std::vector<CanonicalForm> enumerate_admitting_graphs(int n_max, int threads) {
    if (n_max > kEnumerationCap)
        throw std::invalid_argument(fmt::format("enumerate_admitting_graphs: n_max = {} exceeds cap {}", n_max, kEnumerationCap));
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    std::set<CanonicalForm> found;
    std::mutex mu;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Edge> slots;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
        const std::uint64_t total = std::uint64_t{1} << slots.size();

        auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
            std::set<CanonicalForm> local;
            std::uint8_t adj[8];
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                std::fill(adj, adj + 8, 0);
                for (std::size_t b = 0; b < slots.size(); ++b)
                    if ((mask >> b) & 1) {
                        adj[slots[b].first] |= static_cast<std::uint8_t>(1u << slots[b].second);
                        adj[slots[b].second] |= static_cast<std::uint8_t>(1u << slots[b].first);
                    }
                if (!admits_bitmask(n, adj)) continue;
                std::vector<Edge> edges;
                for (std::size_t b = 0; b < slots.size(); ++b)
                    if ((mask >> b) & 1) edges.push_back(slots[b]);
                Graph g(n, edges);
                if (!check_existence(g).exists) continue;
                local.insert(canonical_form(g));
            }
            std::lock_guard lock(mu);
            found.insert(local.begin(), local.end());
        };

        const auto parts = static_cast<std::uint64_t>(threads);
        std::vector<std::thread> pool;
        for (std::uint64_t t = 0; t < parts; ++t) {
            std::uint64_t lo = total * t / parts, hi = total * (t + 1) / parts;
            if (parts == 1) {
                worker(lo, hi);
                break;
            }
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return {found.begin(), found.end()};
}

}  // namespace errcode
