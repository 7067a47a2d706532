#include <doctest.h>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/rng.hpp"
#include "support/oracles.hpp"

using namespace errcode;

namespace {

oracle::Kind oracle_kind(CodeKind k) {
    switch (k) {
        case CodeKind::IC: return oracle::Kind::ic;
        case CodeKind::RED_IC: return oracle::Kind::red;
        case CodeKind::DET_IC: return oracle::Kind::det;
        case CodeKind::ERR_IC: return oracle::Kind::err;
    }
    return oracle::Kind::err;
}

const CodeKind kAllKinds[] = {CodeKind::IC, CodeKind::RED_IC, CodeKind::DET_IC, CodeKind::ERR_IC};

}  // namespace

TEST_CASE("code kind names") {
    CHECK(parse_code_kind("err") == CodeKind::ERR_IC);
    CHECK(parse_code_kind("ERR:IC") == CodeKind::ERR_IC);
    CHECK(parse_code_kind("red") == CodeKind::RED_IC);
    CHECK(parse_code_kind("det") == CodeKind::DET_IC);
    CHECK(parse_code_kind("ic") == CodeKind::IC);
    CHECK(to_string(CodeKind::DET_IC) == "DET:IC");
    CHECK_THROWS_AS(parse_code_kind("xyz"), std::invalid_argument);
}

TEST_CASE("domination counts") {
    auto g1 = make_small_graph(SmallGraph::G1);
    VertexSet all = oracle::all_vertices(7);
    CHECK(domination_count(g1.graph, all, g1.labels.at("d")) == 3);
    Graph p = oracle::petersen();
    for (Vertex v = 0; v < p.n(); ++v) {
        CHECK(domination_count(p, oracle::all_vertices(10), v) == 4);
        CHECK(domination_count(p, {}, v) == 0);
    }
}

TEST_CASE("distinguishing counts") {
    Graph k4 = oracle::complete(4);
    CHECK(distinguishing_count(k4, {0, 1, 2, 3}, 0, 1) == 0);
    CHECK(distinguishing_count(k4, {2}, 0, 3) == 0);

    Graph p = oracle::petersen();
    auto d = oracle::distances(p);
    VertexSet all = oracle::all_vertices(10);
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
            if (d[u][v] == 1) CHECK(distinguishing_count(p, all, u, v) == 4);
            if (d[u][v] >= 3) CHECK(distinguishing_count(p, all, u, v) == 8);
        }
    Graph cube = make_cyclic_ladder(8).graph;
    auto dc = oracle::distances(cube);
    for (Vertex u = 0; u < cube.n(); ++u)
        for (Vertex v = u + 1; v < cube.n(); ++v) {
            if (dc[u][v] == 1) CHECK(distinguishing_count(cube, oracle::all_vertices(16), u, v) == 4);
            if (dc[u][v] >= 3) CHECK(distinguishing_count(cube, oracle::all_vertices(16), u, v) == 8);
        }
}

TEST_CASE("verify_code on the small witnesses") {
    auto g1 = make_small_graph(SmallGraph::G1).graph;
    CHECK(verify_code(g1, oracle::all_vertices(7), CodeKind::ERR_IC).valid);

    auto c7 = verify_code(oracle::cycle(7), oracle::all_vertices(7), CodeKind::ERR_IC);
    CHECK_FALSE(c7.valid);
    CHECK(c7.domination_failures.empty());
    REQUIRE_FALSE(c7.distinguishing_failures.empty());
    const auto& f = c7.distinguishing_failures.front();
    CHECK(f == DistinguishingFailure{0, 1, 2, 1, 1, 3});

    auto k4 = verify_code(oracle::complete(4), {0, 1, 2, 3}, CodeKind::IC);
    CHECK_FALSE(k4.valid);
    CHECK(k4.distinguishing_failures.size() == 6);
    CHECK(k4.distinguishing_failures.front().symmetric == 0);

    VertexSet drop_two = {0, 1, 2, 3, 4};
    auto rep = verify_code(g1, drop_two, CodeKind::ERR_IC);
    CHECK_FALSE(rep.valid);
    CHECK_FALSE(rep.domination_failures.empty());
}

TEST_CASE("verify_code agrees with the definition for every kind") {
    Rng rng(17);
    for (int t = 0; t < 400; ++t) {
        const int n = rng.range(2, 9);
        Graph g = random_gnp(n, 0.3 + 0.5 * rng.unit(), rng.next());
        auto s = oracle::random_subset(n, 0.6 + 0.4 * rng.unit(), rng);
        for (CodeKind k : kAllKinds) CHECK(verify_code(g, s, k).valid == oracle::valid(g, s, oracle_kind(k)));
        CHECK(is_errcode(g, s) == oracle::errcode_valid(g, s));
    }
}

TEST_CASE("strength ordering of code kinds") {
    Rng rng(23);
    for (int t = 0; t < 500; ++t) {
        const int n = rng.range(3, 10);
        Graph g = random_gnp(n, 0.5, rng.next());
        auto s = oracle::random_subset(n, 0.8, rng);
        bool ic = verify_code(g, s, CodeKind::IC).valid;
        bool red = verify_code(g, s, CodeKind::RED_IC).valid;
        bool det = verify_code(g, s, CodeKind::DET_IC).valid;
        bool err = verify_code(g, s, CodeKind::ERR_IC).valid;
        if (err) CHECK(red);
        if (red) CHECK(ic);
        if (det) CHECK(red);
    }
}

TEST_CASE("adding detectors never breaks an ERR:IC") {
    Rng rng(29);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        Graph g = random_regular(12, rng.coin() ? 3 : 4, rng.next());
        auto s = oracle::random_subset(12, 0.9, rng);
        if (!is_errcode(g, s)) continue;
        ++checked;
        for (Vertex v = 0; v < 12; ++v) {
            VertexSet bigger = s;
            bigger.push_back(v);
            CHECK(is_errcode(g, make_vertex_set(g, bigger)));
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("S = V is an ERR:IC exactly when one exists") {
    Rng rng(31);
    for (int t = 0; t < 400; ++t) {
        const int n = rng.range(1, 8);
        Graph g = random_gnp(n, 0.3 + 0.6 * rng.unit(), rng.next());
        bool whole = verify_code(g, oracle::all_vertices(n), CodeKind::ERR_IC).valid;
        CHECK(whole == check_existence(g).exists);
        CHECK(whole == (oracle::min_errcode_size(g) >= 0));
    }
}

TEST_CASE("share values") {
    Graph p = oracle::petersen();
    for (Vertex v = 0; v < 10; ++v) CHECK(share(p, oracle::all_vertices(10), v) == Rational(1));

    // A non-detector v on a cubic triangle-free graph: each neighbour x is
    // 3-dominated and its two other neighbours stay 4-dominated.
    auto g = make_cyclic_ladder(8).graph;
    VertexSet s = complement(g, {0});
    for (Vertex x : g.neighbors(0)) {
        CHECK(share(g, s, x) == Rational(7, 6));
        CHECK(share(g, s, x) == oracle::share(g, s, x));
    }
}

TEST_CASE("shares of a dominating set sum to n") {
    Rng rng(37);
    int checked = 0;
    while (checked < 200) {
        const int n = rng.range(3, 14);
        Graph g = random_gnp(n, 0.35, rng.next());
        auto s = oracle::random_subset(n, 0.5, rng);
        bool dominating = true;
        for (Vertex v = 0; v < n; ++v) dominating = dominating && domination_count(g, s, v) > 0;
        if (!dominating) continue;
        ++checked;
        Rational sum(0);
        for (Vertex v : s) {
            CHECK(share(g, s, v) == oracle::share(g, s, v));
            sum += share(g, s, v);
        }
        CHECK(sum == Rational(n));
    }
}
