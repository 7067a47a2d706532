#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "errcode/codes.hpp"
#include "errcode/families.hpp"
#include "errcode/rng.hpp"
#include "errcode/solver.hpp"

namespace errcode {

namespace {

bool cubic_code_graph(const Graph& g) {
    return g.is_regular(3) && find_twins(g).empty() && find_triangles(g).empty();
}

// |S̄| is valid and has the given optimum size.
bool certifies(const Graph& g, const VertexSet& nondet, int optimum) {
    if (!cubic_code_graph(g)) return false;
    if (!nondetector_conditions_hold(g, nondet) || !is_errcode(g, complement(g, nondet))) return false;
    return g.n() - max_nondetectors_cubic(g).size == optimum;
}

Graph safe_graph(int n, const std::vector<Edge>& edges, bool& ok) {
    try {
        ok = true;
        return Graph(n, edges);
    } catch (const GraphError&) {
        ok = false;
        return Graph();
    }
}

int count_far_pairs(const std::vector<std::vector<int>>& d, const std::vector<Vertex>& from, int n) {
    int c = 0;
    for (Vertex a : from)
        for (Vertex v = 0; v < n; ++v)
            if (d[a][v] < 0 || d[a][v] > 3) ++c;
    return c;
}

int twin_count(const Graph& g) { return static_cast<int>(find_twins(g).size()); }
int triangle_count(const Graph& g) { return static_cast<int>(find_triangles(g).size()); }

// Degree-preserving annealing over the edges in `free_edges`; `fixed` stays.
template <class Cost>
std::vector<Edge> anneal(int n, const std::vector<Edge>& fixed, std::vector<Edge> free_edges, Rng& rng, int iters,
                         Cost cost) {
    auto total = [&](const std::vector<Edge>& fe) {
        std::vector<Edge> all = fixed;
        all.insert(all.end(), fe.begin(), fe.end());
        bool ok = false;
        Graph g = safe_graph(n, all, ok);
        return ok ? cost(g) : 1000;
    };
    int cur = total(free_edges);
    double temp = 1.0;
    for (int it = 0; it < iters && cur > 0; ++it) {
        auto i = rng.below(free_edges.size()), j = rng.below(free_edges.size());
        if (i == j) continue;
        auto cand = free_edges;
        auto [p, q] = cand[i];
        auto [r, s] = cand[j];
        if (rng.coin()) std::swap(r, s);
        cand[i] = {std::min(p, r), std::max(p, r)};
        cand[j] = {std::min(q, s), std::max(q, s)};
        int next = total(cand);
        if (next <= cur || rng.unit() < std::exp((cur - next) / temp)) {
            free_edges = std::move(cand);
            cur = next;
        }
        temp = std::max(0.05, temp * 0.9997);
    }
    return cur == 0 ? free_edges : std::vector<Edge>{};
}

}  // namespace

namespace search {

G6Block g6_block() {
    std::vector<Edge> slots;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) slots.emplace_back(u, v);
    // Seven edges; vertices 0 and 1 have degree 3, the rest are stubs.
    std::array<int, 7> idx{};
    std::iota(idx.begin(), idx.end(), 0);
    const int S = static_cast<int>(slots.size());
    while (true) {
        std::vector<Edge> edges;
        std::array<int, 6> deg{};
        for (int i : idx) {
            edges.push_back(slots[i]);
            ++deg[slots[i].first];
            ++deg[slots[i].second];
        }
        bool shape = deg[0] == 3 && deg[1] == 3 && deg[2] == 2 && deg[3] == 2 && deg[4] == 2 && deg[5] == 2;
        if (shape) {
            Graph block(6, edges);
            auto diam = diameter(block);
            if (!diam.is_infinite() && diam.value() == 3) {
                std::array<int, 4> stubs{2, 3, 4, 5};
                do {
                    for (int c = 0; c < 6; ++c) {
                        G6Block b{edges, stubs[0], stubs[1], stubs[2], stubs[3], c};
                        bool ok = true;
                        for (int k = 2; k <= 5 && ok; ++k) {
                            Graph g = g6_ring(b, k, true);
                            VertexSet nd;
                            for (int t = 0; t < k; ++t) nd.push_back(6 * t + c);
                            ok = k <= 3 ? certifies(g, nd, k)
                                        : cubic_code_graph(g) && nondetector_conditions_hold(g, nd);
                        }
                        for (int k = 3; k <= 5 && ok; ++k) {
                            Graph g = g6_ring(b, k, false);
                            VertexSet nd;
                            for (int t = 0; t < k; ++t) nd.push_back(6 * t + c);
                            ok = k <= 3 ? certifies(g, nd, k)
                                        : cubic_code_graph(g) && nondetector_conditions_hold(g, nd);
                        }
                        if (ok) return b;
                    }
                } while (std::next_permutation(stubs.begin(), stubs.end()));
            }
        }
        int i = 6;
        while (i >= 0 && idx[i] == S - 7 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 7; ++j) idx[j] = idx[j - 1] + 1;
    }
    throw SearchExhausted("no six-vertex block certifies");
}

G18Block g18_block(std::uint64_t seed, int max_restarts) {
    const std::string labels = "abcdefghijklmnpqrs";
    auto at = [&](char ch) { return static_cast<Vertex>(labels.find(ch)); };
    const Vertex i = at('i'), j = at('j');
    const std::vector<Edge> fixed{{at('d'), i}, {i, at('p')}, {at('e'), j}, {j, at('n')}};
    std::vector<Vertex> A;
    for (char ch : std::string("abcfghklmqrs")) A.push_back(at(ch));

    auto cost = [&](const Graph& g) {
        auto d = all_pairs_distances(g);
        int c = count_far_pairs(d, A, g.n());
        if (d[i][j] >= 0 && d[i][j] < 4) c += 5;
        c += 3 * triangle_count(g) + 3 * twin_count(g);
        return c;
    };

    Rng rng(seed);
    for (int restart = 0; restart < max_restarts; ++restart) {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < 18; ++v) {
            int used = 0;
            for (auto [a, b] : fixed) used += (a == v) + (b == v);
            int want = (v == i || v == j) ? 2 : 3;
            for (int s = used; s < want; ++s) stubs.push_back(v);
        }
        rng.shuffle(stubs);
        std::vector<Edge> free_edges;
        for (std::size_t s = 0; s < stubs.size(); s += 2)
            free_edges.emplace_back(std::min(stubs[s], stubs[s + 1]), std::max(stubs[s], stubs[s + 1]));
        auto found = anneal(18, fixed, free_edges, rng, 20000, cost);
        if (found.empty()) continue;

        std::vector<Edge> block = fixed;
        block.insert(block.end(), found.begin(), found.end());
        bool ok = true;
        for (int k = 1; k <= 4 && ok; ++k) {
            Graph g = g18_ring(block, k);
            ok = cubic_code_graph(g) && g.n() - max_nondetectors_cubic(g).size == k + k / 2;
        }
        if (!ok) continue;
        for (Vertex b : A) {
            bool recipe_ok = true;
            for (int k = 1; k <= 4 && recipe_ok; ++k) {
                Graph g = g18_ring(block, k);
                auto nd = g18_recipe(k, b);
                recipe_ok = nondetector_conditions_hold(g, nd) && is_errcode(g, complement(g, nd));
            }
            if (!recipe_ok) continue;
            // Relabel so the recipe vertex carries the label 'b'.
            const Vertex target = at('b');
            std::vector<Vertex> perm(18);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[b], perm[target]);
            std::vector<Edge> out;
            for (auto [u, v] : block) out.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
            std::sort(out.begin(), out.end());
            return {out, target};
        }
    }
    throw SearchExhausted(fmt::format("no 18-vertex block found after {} restarts", max_restarts));
}

std::pair<int, int> ladder_pattern() {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            bool ok = true;
            for (int m = 8; m <= 24 && ok; m += 8) {
                std::vector<Edge> edges;
                for (int c = 0; c < m; ++c) {
                    edges.emplace_back(c, m + c);
                    edges.emplace_back(c, (c + 1) % m);
                    edges.emplace_back(m + c, m + (c + 1) % m);
                }
                Graph g(2 * m, edges);
                VertexSet nd;
                for (int t = 0; t < m; t += 8) {
                    nd.push_back(a + t);
                    nd.push_back(m + b + t);
                }
                std::sort(nd.begin(), nd.end());
                ok = nondetector_conditions_hold(g, nd) && is_errcode(g, complement(g, nd));
            }
            if (ok) return {a, b};
        }
    throw SearchExhausted("no period-8 ladder pattern");
}

std::pair<int, int> hex_pattern() {
    const std::array<std::pair<int, int>, 4> sizes{{{4, 6}, {6, 6}, {8, 6}, {4, 12}}};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            bool ok = true;
            for (auto [rows, cols] : sizes) {
                std::vector<Edge> edges;
                for (int r = 0; r < rows && ok; ++r)
                    for (int c = 0; c < cols; ++c) {
                        edges.emplace_back(r * cols + c, r * cols + (c + 1) % cols);
                        if ((r + c) % 2 == 0) edges.emplace_back(r * cols + c, ((r + 1) % rows) * cols + c);
                    }
                Graph g(rows * cols, edges);
                VertexSet nd;
                for (int r = 0; r < rows; ++r)
                    for (int c = (r % 2 == 0 ? a : b); c < cols; c += 6) nd.push_back(r * cols + c);
                std::sort(nd.begin(), nd.end());
                ok = nondetector_conditions_hold(g, nd) && is_errcode(g, complement(g, nd));
                if (!ok) break;
            }
            if (ok) return {a, b};
        }
    throw SearchExhausted("no period-6 hex pattern");
}

}  // namespace search

CertifiedConstruction find_g20(std::uint64_t seed, int max_restarts) {
    auto cost = [](const Graph& g) {
        auto d = all_pairs_distances(g);
        int c = 0;
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = u + 1; v < g.n(); ++v)
                if (d[u][v] < 0 || d[u][v] > 3) ++c;
        return c + 3 * triangle_count(g) + 3 * twin_count(g);
    };
    Rng rng(seed);
    for (int restart = 0; restart < max_restarts; ++restart) {
        Graph start = random_regular(20, 3, rng.next());
        auto found = anneal(20, {}, start.edges(), rng, 30000, cost);
        if (found.empty()) continue;
        std::sort(found.begin(), found.end());
        Graph g(20, found);
        auto best = max_nondetectors_cubic(g);
        if (best.size != 19) continue;
        return certify("G20", g, best.detectors);
    }
    throw SearchExhausted(fmt::format("no 20-vertex diameter-3 graph after {} restarts", max_restarts));
}

}  // namespace errcode
