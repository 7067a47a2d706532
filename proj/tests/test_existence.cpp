#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/rng.hpp"
#include "support/oracles.hpp"

using namespace errcode;

namespace {

bool has(const ExistenceReport& r, ExistenceProperty p) {
    return std::find(r.failed_properties.begin(), r.failed_properties.end(), p) != r.failed_properties.end();
}

// Cubic graph with a triangle: K4 minus an edge, twice, joined into a ring.
Graph cubic_with_triangle() {
    return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {3, 7}});
}

}  // namespace

TEST_CASE("existence on the named examples") {
    auto g1 = check_existence(make_small_graph(SmallGraph::G1).graph);
    CHECK(g1.exists);
    CHECK(g1.failed_properties.empty());
    CHECK(check_existence(make_small_graph(SmallGraph::G2).graph).exists);

    auto c7 = check_existence(oracle::cycle(7));
    CHECK_FALSE(c7.exists);
    CHECK(has(c7, ExistenceProperty::adjacent_degree2));

    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        auto tree = check_existence(oracle::random_tree(rng.range(2, 15), rng));
        CHECK_FALSE(tree.exists);
        CHECK(has(tree, ExistenceProperty::min_degree));
    }
    CHECK(check_existence(oracle::petersen()).exists);
    CHECK(verify_code(oracle::petersen(), oracle::all_vertices(10), CodeKind::ERR_IC).valid);

    auto k4 = check_existence(oracle::complete(4));
    CHECK(has(k4, ExistenceProperty::twins));
    CHECK_FALSE(k4.twin_witnesses.empty());
}

TEST_CASE("special criteria") {
    auto tri = check_existence_special(cubic_with_triangle());
    CHECK_FALSE(tri.exists);
    CHECK(tri.criterion == "cubic");
    for (int n : {5, 8, 11}) CHECK_FALSE(check_existence_special(oracle::cycle(n)).exists);
    auto p = check_existence_special(oracle::petersen());
    CHECK(p.exists);
    CHECK(p.criterion == "cubic");
    auto tf = check_existence_special(make_small_graph(SmallGraph::G1).graph);
    CHECK(tf.exists);
    CHECK(tf.criterion == "triangle-free");
}

TEST_CASE("special criteria agree with the general test per class") {
    Rng rng(41);
    int triangle_free = 0, cubic = 0, regular = 0;
    while (triangle_free < 1000) {
        const int n = rng.range(4, 14);
        Graph g = random_gnp(n, 0.15 + 0.3 * rng.unit(), rng.next());
        if (!find_triangles(g).empty()) continue;
        ++triangle_free;
        CHECK(check_existence_special(g).exists == check_existence(g).exists);
    }
    while (cubic < 1000) {
        Graph g = random_regular(2 * rng.range(2, 9), 3, rng.next());
        ++cubic;
        CHECK(check_existence_special(g).exists == check_existence(g).exists);
    }
    while (regular < 1000) {
        const int k = rng.range(2, 4);
        int n = rng.range(k + 2, 14);
        if (n * k % 2) ++n;
        Graph g = random_regular(n, k, rng.next());
        ++regular;
        CHECK(check_existence_special(g).exists == check_existence(g).exists);
    }
}

TEST_CASE("existence matches S = V verification on every graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = oracle::from_mask(n, mask);
            auto rep = check_existence(g);
            CHECK(rep.exists == oracle::errcode_valid(g, oracle::all_vertices(n)));
            CHECK_FALSE(rep.exists);
        }
    }
}

TEST_CASE("existence matches S = V verification on random 7- and 8-vertex graphs") {
    Rng rng(43);
    int admitting = 0;
    for (int t = 0; t < 3000; ++t) {
        const int n = rng.range(7, 8);
        Graph g = random_gnp(n, 0.3 + 0.4 * rng.unit(), rng.next());
        bool e = check_existence(g).exists;
        CHECK(e == oracle::errcode_valid(g, oracle::all_vertices(n)));
        admitting += e;
    }
    MESSAGE("admitting samples: " << admitting);
}

TEST_CASE("triangle property is symmetric in the triangle's vertices") {
    Rng rng(47);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_gnp(8, 0.5, rng.next());
        auto base = check_existence(g);
        std::vector<Vertex> perm = oracle::all_vertices(8);
        rng.shuffle(perm);
        auto moved = check_existence(relabel(g, perm));
        CHECK(has(base, ExistenceProperty::triangle) == has(moved, ExistenceProperty::triangle));
        CHECK(base.triangle_witnesses.size() == moved.triangle_witnesses.size());
    }
}

TEST_CASE("enumeration of small admitting graphs") {
    CHECK(enumerate_admitting_graphs(3).empty());
    CHECK(enumerate_admitting_graphs(6).empty());
    auto seven = enumerate_admitting_graphs(7);
    REQUIRE(seven.size() == 2);
    std::vector<CanonicalForm> expected{canonical_form(make_small_graph(SmallGraph::G1).graph),
                                        canonical_form(make_small_graph(SmallGraph::G2).graph)};
    std::sort(expected.begin(), expected.end());
    CHECK(seven == expected);
    for (const auto& cf : seven) {
        Graph g = from_canonical_form(cf);
        CHECK(g.n() == 7);
        CHECK(g.num_edges() == 9);
    }
    CHECK(enumerate_admitting_graphs(7, 2) == seven);
    CHECK_THROWS_AS(enumerate_admitting_graphs(8), std::invalid_argument);
}

TEST_CASE("brute-force labelled scan on 7 vertices finds the same two classes") {
    // Closed neighbourhoods as bitmasks; S = V is an ERR:IC iff every |N[v]| >= 3
    // and every pair has |N[u] xor N[v]| >= 3.
    const int n = 7, pairs = 21;
    std::set<std::string> classes;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        if (__builtin_popcount(mask) < 9) continue;
        std::array<std::uint32_t, 7> nb{};
        for (int v = 0; v < n; ++v) nb[v] = 1u << v;
        for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) {
                nb[idx[b].first] |= 1u << idx[b].second;
                nb[idx[b].second] |= 1u << idx[b].first;
            }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = __builtin_popcount(nb[v]) >= 3;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) ok = __builtin_popcount(nb[u] ^ nb[v]) >= 3;
        if (ok) classes.insert(oracle::brute_canonical(oracle::from_mask(n, mask)));
    }
    CHECK(classes.size() == 2);
    CHECK(classes.count(oracle::brute_canonical(make_small_graph(SmallGraph::G1).graph)) == 1);
    CHECK(classes.count(oracle::brute_canonical(make_small_graph(SmallGraph::G2).graph)) == 1);
}
