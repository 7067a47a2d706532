#include <doctest.h>

#include <algorithm>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/rng.hpp"
#include "errcode/solver.hpp"
#include "support/oracles.hpp"

using namespace errcode;

namespace {

// Cubic, twin-free and triangle-free samples of order n.
std::vector<Graph> cubic_code_graphs(int count, int n_lo, int n_hi, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        Graph g = random_regular(2 * rng.range(n_lo / 2, n_hi / 2), 3, rng.next());
        if (find_twins(g).empty() && find_triangles(g).empty()) out.push_back(g);
    }
    return out;
}

void check_lemmas(const Graph& g, const VertexSet& code) {
    auto violations = cubic_lemma_violations(g, code);
    CHECK(violations.empty());
    if (!g.is_regular(3)) return;
    for (Vertex v : complement(g, code))
        for (Vertex u : ball(g, v, 3))
            if (u != v) CHECK(std::binary_search(code.begin(), code.end(), u));
}

}  // namespace

TEST_CASE("oracle solver on the small examples") {
    auto g1 = min_errcode_oracle(make_small_graph(SmallGraph::G1).graph);
    REQUIRE(g1);
    CHECK(g1->size == 7);
    CHECK(g1->method == SolveMethod::oracle);
    CHECK_FALSE(min_errcode_oracle(oracle::cycle(7)));
    Rng rng(1);
    for (int t = 0; t < 50; ++t) CHECK_FALSE(min_errcode_oracle(random_gnp(rng.range(1, 6), 0.7, rng.next())));
    CHECK_THROWS_AS(min_errcode_oracle(Graph(21)), BudgetExceeded);
}

TEST_CASE("oracle solver matches exhaustive subset scan") {
    Rng rng(53);
    for (int t = 0; t < 120; ++t) {
        const int n = rng.range(6, 11);
        Graph g = random_gnp(n, 0.4 + 0.4 * rng.unit(), rng.next());
        auto got = min_errcode_oracle(g);
        const int ref = oracle::min_errcode_size(g);
        CHECK((got ? got->size : -1) == ref);
        if (got) CHECK(oracle::errcode_valid(g, got->detectors));
    }
}

TEST_CASE("branch and bound on the named graphs") {
    auto g1 = min_errcode(make_small_graph(SmallGraph::G1).graph);
    REQUIRE(g1);
    CHECK(g1->size == 7);
    CHECK(min_errcode(make_small_graph(SmallGraph::G2).graph)->size == 7);
    CHECK_FALSE(min_errcode(oracle::cycle(7)));
    CHECK(min_errcode(load_g20().graph)->size == 19);
}

TEST_CASE("branch and bound equals the oracle, detector for detector") {
    Rng rng(59);
    int with_code = 0, without = 0;
    while (with_code < 80) {
        const int n = rng.range(7, 12);
        Graph g = random_gnp(n, 0.35 + 0.5 * rng.unit(), rng.next());
        const bool admits = check_existence(g).exists;
        if (!admits && without >= 40) continue;
        auto a = min_errcode(g), b = min_errcode_oracle(g);
        REQUIRE(a.has_value() == b.has_value());
        CHECK(a.has_value() == admits);
        if (!a) {
            ++without;
            continue;
        }
        ++with_code;
        CHECK(a->size == b->size);
        CHECK(a->detectors == b->detectors);
        CHECK(is_errcode(g, a->detectors));
    }
}

TEST_CASE("branch and bound is independent of the thread count") {
    for (const Graph& g : cubic_code_graphs(8, 14, 20, 61)) {
        auto one = min_errcode(g, {1, 0});
        auto four = min_errcode(g, {4, 0});
        REQUIRE(one);
        REQUIRE(four);
        CHECK(one->detectors == four->detectors);
    }
}

TEST_CASE("node budget") {
    Graph g = make_hex_torus(4, 6).graph;
    try {
        (void)min_errcode(g, {1, 3});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower_bound <= 20);
    }
}

TEST_CASE("root propagation") {
    CHECK(root_forced_detectors(make_small_graph(SmallGraph::G1).graph) == oracle::all_vertices(7));
    CHECK_FALSE(root_forced_detectors(oracle::cycle(7)));
    CHECK(root_forced_detectors(oracle::petersen())->empty());
}

TEST_CASE("rival quadruples") {
    // 4-cycle 0-1-2-3 with a pendant path on each corner.
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    auto q = find_rivals(g);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == RivalQuadruple{0, 2, 4, 6, 1, 3});
    CHECK(q[1] == RivalQuadruple{1, 3, 5, 7, 0, 2});
    CHECK(find_rivals(oracle::k33()).size() == 18);
    CHECK(find_rivals(oracle::petersen()).empty());
}

TEST_CASE("cubic preconditions") {
    CHECK_NOTHROW(require_cubic_code_graph(oracle::petersen()));
    CHECK_THROWS_AS(require_cubic_code_graph(oracle::cycle(8)), PreconditionError);
    CHECK_THROWS_AS(require_cubic_code_graph(oracle::k33()), PreconditionError);
    CHECK_THROWS_AS(require_cubic_code_graph(oracle::complete(4)), PreconditionError);
}

TEST_CASE("non-detector conditions characterize cubic codes") {
    Rng rng(67);
    for (const Graph& g : cubic_code_graphs(40, 10, 18, 71)) {
        for (int t = 0; t < 50; ++t) {
            VertexSet nd = oracle::random_subset(g.n(), 0.06 + 0.1 * rng.unit(), rng);
            CHECK(nondetector_conditions_hold(g, nd) == oracle::errcode_valid(g, complement(g, nd)));
        }
    }
}

TEST_CASE("complement search equals branch and bound on cubic graphs") {
    for (const Graph& g : cubic_code_graphs(30, 10, 20, 73)) {
        auto direct = min_errcode(g);
        auto comp = max_nondetectors_cubic(g);
        REQUIRE(direct);
        CHECK(comp.size == direct->size);
        CHECK(comp.detectors == direct->detectors);
        CHECK(comp.method == SolveMethod::complement_search);
        CHECK(comp.size < g.n());
        check_lemmas(g, comp.detectors);
        CHECK(Rational(comp.size, g.n()) >= Rational(5, 6));
        CHECK(Rational(comp.size, g.n()) <= Rational(21, 22));
    }
}

TEST_CASE("cubic family optima") {
    CHECK(max_nondetectors_cubic(load_g20().graph).size == 19);
    for (int k = 2; k <= 4; ++k) CHECK(max_nondetectors_cubic(make_g6_family(k).graph).size == 5 * k);
    CHECK_THROWS_AS(max_nondetectors_cubic(oracle::cycle(8)), PreconditionError);
}

TEST_CASE("lemma checker flags broken codes") {
    Graph p = make_cyclic_ladder(8).graph;
    VertexSet two_close = complement(p, {0, 2});
    auto v = cubic_lemma_violations(p, two_close);
    CHECK_FALSE(v.empty());
    CHECK(cubic_lemma_violations(p, oracle::all_vertices(16)).empty());
    CHECK(cubic_lemma_violations(oracle::cycle(7), {}).empty());
}
