#include <doctest.h>

#include <algorithm>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/solver.hpp"
#include "support/oracles.hpp"

using namespace errcode;

namespace {

void check_cubic_construction(const CertifiedConstruction& c) {
    CHECK(c.graph.is_regular(3));
    CHECK(check_existence(c.graph).exists);
    REQUIRE(c.code);
    CHECK(oracle::errcode_valid(c.graph, *c.code));
    CHECK(*c.claimed_size == static_cast<int>(c.code->size()));
    CHECK(*c.claimed_density() >= Rational(5, 6));
    CHECK(*c.claimed_density() <= Rational(21, 22));
}

std::string copy_label(char ch, int copy) { return std::string(1, ch) + "_" + std::to_string(copy); }

int max_nondetector_count(const Graph& g) { return g.n() - max_nondetectors_cubic(g).size; }

}  // namespace

TEST_CASE("small graphs") {
    for (auto which : {SmallGraph::G1, SmallGraph::G2}) {
        auto c = make_small_graph(which);
        CHECK(c.graph.n() == 7);
        CHECK(c.graph.num_edges() == 9);
        CHECK(check_existence(c.graph).exists);
        CHECK(c.claimed_size == 7);
        CHECK(oracle::min_errcode_size(c.graph) == 7);
    }
    auto g1 = make_small_graph(SmallGraph::G1);
    CHECK(g1.graph.adjacent(g1.labels.at("b'"), g1.labels.at("c'")));
    auto g2 = make_small_graph(SmallGraph::G2);
    CHECK(g2.graph.adjacent(g2.labels.at("a'"), g2.labels.at("c'")));
}

TEST_CASE("certification rejects a bad code") {
    CHECK_THROWS_AS(certify("C7", oracle::cycle(7), oracle::all_vertices(7)), std::logic_error);
    auto plain = certify("C7", oracle::cycle(7), std::nullopt);
    CHECK_FALSE(plain.claimed_size);
    CHECK_FALSE(plain.claimed_density());
}

TEST_CASE("G6 family") {
    for (int k = 2; k <= 5; ++k) {
        auto c = make_g6_family(k);
        CHECK(c.graph.n() == 6 * k);
        CHECK(*c.claimed_size == 5 * k);
        CHECK(*c.claimed_density() == Rational(5, 6));
        check_cubic_construction(c);
        CHECK(max_nondetectors_cubic(c.graph).size == 5 * k);
    }
    CHECK(make_g6_family(2).claimed_size == 10);
    CHECK_THROWS_AS(make_g6_family(1), FamilyError);
    CHECK_THROWS_AS(make_g6_family(2, false), FamilyError);
}

TEST_CASE("G6 block has diameter 3") {
    Graph block = parse_graph(fixture_text("g6_block.el"));
    CHECK(block.n() == 6);
    CHECK(diameter(block) == Distance(3));
}

TEST_CASE("G6 straight rings keep the size but change the graph") {
    for (int k = 3; k <= 5; ++k) {
        auto mob = make_g6_family(k, true), straight = make_g6_family(k, false);
        CHECK(straight.claimed_size == mob.claimed_size);
        CHECK(max_nondetectors_cubic(straight.graph).size == *straight.claimed_size);
        CHECK(distance_profile(mob.graph) != distance_profile(straight.graph));
    }
}

TEST_CASE("G18 family") {
    for (int k = 1; k <= 4; ++k) {
        auto c = make_g18_family(k);
        CHECK(c.graph.n() == 18 * k);
        CHECK(*c.claimed_size == 18 * k - (k + k / 2));
        check_cubic_construction(c);
        CHECK(max_nondetectors_cubic(c.graph).size == *c.claimed_size);
    }
    CHECK(make_g18_family(1).claimed_density() == Rational(17, 18));
    CHECK(make_g18_family(2).claimed_size == 33);
    CHECK(make_g18_family(4).claimed_size == 66);
    auto one = make_g18_family(1);
    CHECK(one.graph.adjacent(one.labels.at("i_0"), one.labels.at("j_0")));
}

TEST_CASE("G18 non-detectors avoid two red vertices in a copy") {
    for (int k = 1; k <= 4; ++k) {
        auto c = make_g18_family(k);
        auto nd = complement(c.graph, max_nondetectors_cubic(c.graph).detectors);
        for (int t = 0; t < k; ++t) {
            int red = 0, blue = 0;
            for (char ch : std::string("dip")) red += std::count(nd.begin(), nd.end(), c.labels.at(copy_label(ch, t)));
            for (char ch : std::string("ejn")) blue += std::count(nd.begin(), nd.end(), c.labels.at(copy_label(ch, t)));
            CHECK(red <= 1);
            CHECK(blue <= 1);
        }
    }
}

TEST_CASE("G20 fixture") {
    auto c = load_g20();
    CHECK(c.graph.n() == 20);
    CHECK(diameter(c.graph) == Distance(3));
    CHECK(find_twins(c.graph).empty());
    CHECK(find_triangles(c.graph).empty());
    CHECK(c.claimed_size == 19);
    check_cubic_construction(c);
    CHECK(max_nondetector_count(c.graph) == 1);
}

TEST_CASE("cyclic ladders") {
    auto l8 = make_cyclic_ladder(8);
    CHECK(l8.graph.n() == 16);
    CHECK(l8.claimed_size == 14);
    check_cubic_construction(l8);
    auto l16 = make_cyclic_ladder(16);
    CHECK(l16.claimed_size == 28);
    CHECK(max_nondetectors_cubic(l16.graph).size == 28);
    auto l10 = make_cyclic_ladder(10);
    CHECK_FALSE(l10.code);
    CHECK_THROWS_AS(make_cyclic_ladder(4), FamilyError);
}

TEST_CASE("hex tori") {
    auto h = make_hex_torus(4, 6);
    CHECK(h.graph.n() == 24);
    CHECK(h.claimed_size == 20);
    CHECK(find_triangles(h.graph).empty());
    check_cubic_construction(h);
    CHECK(max_nondetectors_cubic(h.graph).size == 20);
    for (auto [r, c] : {std::pair{6, 6}, std::pair{8, 6}, std::pair{4, 12}}) {
        auto t = make_hex_torus(r, c);
        REQUIRE(t.code);
        CHECK(*t.claimed_density() == Rational(5, 6));
        CHECK(max_nondetectors_cubic(t.graph).size * 6 >= 5 * t.graph.n());
    }
    CHECK_FALSE(make_hex_torus(4, 8).code);
    CHECK_THROWS_AS(make_hex_torus(3, 6), FamilyError);
    CHECK_THROWS_AS(make_hex_torus(2, 4), FamilyError);
}

TEST_CASE("family lookup by name") {
    CHECK(make_family("g1", {}).name == "G1");
    CHECK(make_family("hex", {2, 8, 4, 6}).graph.n() == 24);
    CHECK_THROWS_AS(make_family("square", {}), FamilyError);
    auto side = construction_side_file(make_family("g6", {3, 8, 4, 6}));
    CHECK(side["claimed_density"] == "5/6");
    CHECK(side["n"] == 18);
    CHECK_THROWS_AS(fixture_text("missing.json"), FamilyError);
}
