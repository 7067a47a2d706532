#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcode/graph.hpp"
#include "errcode/rational.hpp"

namespace errcode {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Constructing one of these runs verify_code on the attached code; a code that
// fails verification or disagrees with claimed_size throws std::logic_error.
struct CertifiedConstruction {
    std::string name;
    Graph graph;
    std::optional<VertexSet> code;
    std::optional<int> claimed_size;
    std::map<std::string, Vertex> labels;

    std::optional<Rational> claimed_density() const;
};

CertifiedConstruction certify(std::string name, Graph g, std::optional<VertexSet> code,
                              std::map<std::string, Vertex> labels = {});

enum class SmallGraph { G1, G2 };

// 4-cycle abcd, pendants aa', bb', cc', edge a'b', plus b'c' (G1) or a'c' (G2).
CertifiedConstruction make_small_graph(SmallGraph which);

// k >= 2 copies of the six-vertex block, ring-connected. With mobius the
// last copy's two outgoing edges cross; without, the ring is straight and
// needs k >= 3.
CertifiedConstruction make_g6_family(int k, bool mobius = true);

// k >= 1 copies of the 18-vertex block; copy t's j joins copy t+1's i.
CertifiedConstruction make_g18_family(int k);

// The stored 20-vertex diameter-3 fixture.
CertifiedConstruction load_g20();

// Searches for a 20-vertex cubic, twin-free, triangle-free, diameter-3 graph.
CertifiedConstruction find_g20(std::uint64_t seed, int max_restarts = 200);

// C_m □ P_2: vertex r*m + c is rail r, column c. Code attached when m % 8 == 0.
CertifiedConstruction make_cyclic_ladder(int m);

// Brick-wall torus: (r,c) ~ (r,c±1) and (r+1,c) when r+c is even. Vertex
// r*cols + c. Code attached when cols % 6 == 0.
CertifiedConstruction make_hex_torus(int rows, int cols);

// Family lookup by name for the CLI: g1, g2, g6, g6-straight, g18, g20,
// ladder, hex. Unused parameters are ignored.
struct FamilyParams {
    int k = 2;
    int m = 8;
    int rows = 4;
    int cols = 6;
};
CertifiedConstruction make_family(std::string_view name, const FamilyParams& p);

nlohmann::json construction_side_file(const CertifiedConstruction& c);

// Raw fixture documents as committed under data/fixtures.
std::string_view fixture_text(std::string_view name);

// Fixture search routines used by the regeneration tool.
namespace search {

struct G6Block {
    std::vector<Edge> edges;   // on vertices 0..5
    int left1, left2, right1, right2;
    int designated;
};

// First block in enumeration order that certifies for the Mobius ring at
// k = 2..5 and the straight ring at k = 3..5.
G6Block g6_block();
Graph g6_ring(const G6Block& b, int k, bool mobius);

struct G18Block {
    std::vector<Edge> edges;   // on vertices 0..17, labels a..s without o
    Vertex b;                  // the vertex used by the non-detector recipe
};

G18Block g18_block(std::uint64_t seed, int max_restarts = 200);
Graph g18_ring(const std::vector<Edge>& block, int k);
VertexSet g18_recipe(int k, Vertex b);

// First (rail-0 column, rail-1 column) pair in lexicographic order whose
// period-8 tiling is a valid non-detector set for m = 8, 16, 24.
std::pair<int, int> ladder_pattern();
// Same for the hex torus with period 6 and row parity.
std::pair<int, int> hex_pattern();

}  // namespace search

}  // namespace errcode
