#include "errcode/families.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"

namespace errcode {

std::optional<Rational> CertifiedConstruction::claimed_density() const {
    if (!claimed_size || graph.n() == 0) return std::nullopt;
    return Rational(*claimed_size, graph.n());
}

CertifiedConstruction certify(std::string name, Graph g, std::optional<VertexSet> code,
                              std::map<std::string, Vertex> labels) {
    CertifiedConstruction c{std::move(name), std::move(g), std::nullopt, std::nullopt, std::move(labels)};
    if (code) {
        auto rep = verify_code(c.graph, *code, CodeKind::ERR_IC);
        if (!rep.valid)
            throw std::logic_error(fmt::format("{}: attached code fails ERR:IC verification ({} domination, {} pair failures)",
                                               c.name, rep.domination_failures.size(),
                                               rep.distinguishing_failures.size()));
        c.claimed_size = static_cast<int>(code->size());
        c.code = std::move(code);
    }
    return c;
}

CertifiedConstruction make_small_graph(SmallGraph which) {
    enum { a, b, c, d, a1, b1, c1 };
    std::vector<Edge> edges{{a, b}, {b, c}, {c, d}, {d, a}, {a, a1}, {b, b1}, {c, c1}, {a1, b1}};
    edges.emplace_back(which == SmallGraph::G1 ? Edge{b1, c1} : Edge{a1, c1});
    std::map<std::string, Vertex> labels{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"a'", a1}, {"b'", b1}, {"c'", c1}};
    Graph g(7, edges);
    VertexSet all{0, 1, 2, 3, 4, 5, 6};
    return certify(which == SmallGraph::G1 ? "G1" : "G2", std::move(g), all, std::move(labels));
}

namespace {

nlohmann::json fixture_json(std::string_view name) { return nlohmann::json::parse(fixture_text(name)); }

std::vector<Edge> fixture_edges(std::string_view name) { return parse_graph(fixture_text(name)).edges(); }

void require_cubic_family(const CertifiedConstruction& c) {
    if (!c.graph.is_regular(3) || !check_existence(c.graph).exists)
        throw std::logic_error(fmt::format("{}: generated graph is not a cubic ERR:IC graph", c.name));
}

const std::string kG18Labels = "abcdefghijklmnpqrs";

}  // namespace

namespace search {

Graph g6_ring(const G6Block& b, int k, bool mobius) {
    std::vector<Edge> edges;
    for (int t = 0; t < k; ++t) {
        const int base = 6 * t, next = 6 * ((t + 1) % k);
        for (auto [u, v] : b.edges) edges.emplace_back(base + u, base + v);
        const bool cross = mobius && t == k - 1;
        edges.emplace_back(base + b.right1, next + (cross ? b.left2 : b.left1));
        edges.emplace_back(base + b.right2, next + (cross ? b.left1 : b.left2));
    }
    return Graph(6 * k, edges);
}

Graph g18_ring(const std::vector<Edge>& block, int k) {
    const Vertex i = static_cast<Vertex>(kG18Labels.find('i'));
    const Vertex j = static_cast<Vertex>(kG18Labels.find('j'));
    std::vector<Edge> edges;
    for (int t = 0; t < k; ++t) {
        const int base = 18 * t;
        for (auto [u, v] : block) edges.emplace_back(base + u, base + v);
        edges.emplace_back(base + j, 18 * ((t + 1) % k) + i);
    }
    return Graph(18 * k, edges);
}

VertexSet g18_recipe(int k, Vertex b) {
    const Vertex i = static_cast<Vertex>(kG18Labels.find('i'));
    const Vertex j = static_cast<Vertex>(kG18Labels.find('j'));
    VertexSet out;
    for (int t = 0; t < k; ++t) {
        const bool odd_copy = t % 2 == 0;  // copies are 1-based in the recipe
        if (odd_copy && !(k % 2 == 1 && t == k - 1)) {
            out.push_back(18 * t + i);
            out.push_back(18 * t + j);
        } else {
            out.push_back(18 * t + b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace search

CertifiedConstruction make_g6_family(int k, bool mobius) {
    if (k < 2) throw FamilyError(fmt::format("G6 family needs k >= 2, got {}", k));
    if (!mobius && k < 3) throw FamilyError(fmt::format("straight G6 ring needs k >= 3, got {}", k));
    auto meta = fixture_json("g6_block.json");
    search::G6Block b{fixture_edges("g6_block.el"), meta["left"][0], meta["left"][1], meta["right"][0],
                      meta["right"][1], meta["designated"]};
    Graph g = search::g6_ring(b, k, mobius);
    std::vector<Vertex> out;
    std::map<std::string, Vertex> labels;
    for (int t = 0; t < k; ++t) {
        out.push_back(6 * t + b.designated);
        labels[fmt::format("c_{}", t)] = 6 * t + b.designated;
    }
    auto code = complement(g, out);
    auto c = certify(fmt::format("G6{}(k={})", mobius ? "" : "-straight", k), std::move(g), std::move(code),
                     std::move(labels));
    require_cubic_family(c);
    return c;
}

CertifiedConstruction make_g18_family(int k) {
    if (k < 1) throw FamilyError(fmt::format("G18 family needs k >= 1, got {}", k));
    auto meta = fixture_json("g18_block.json");
    const Vertex b = meta["recipe_vertex"];
    Graph g = search::g18_ring(fixture_edges("g18_block.el"), k);
    std::map<std::string, Vertex> labels;
    for (int t = 0; t < k; ++t)
        for (std::size_t x = 0; x < kG18Labels.size(); ++x)
            labels[fmt::format("{}_{}", kG18Labels[x], t)] = 18 * t + static_cast<Vertex>(x);
    auto c = certify(fmt::format("G18(k={})", k), g, complement(g, search::g18_recipe(k, b)), std::move(labels));
    if (*c.claimed_size != 18 * k - (k + k / 2))
        throw std::logic_error("G18 recipe size disagrees with n - (k + floor(k/2))");
    require_cubic_family(c);
    return c;
}

CertifiedConstruction load_g20() {
    auto meta = fixture_json("g20.json");
    Graph g = parse_graph(fixture_text("g20.el"));
    VertexSet code = meta["code"].get<VertexSet>();
    auto c = certify("G20", std::move(g), code);
    require_cubic_family(c);
    return c;
}

CertifiedConstruction make_cyclic_ladder(int m) {
    if (m < 8) throw FamilyError(fmt::format("cyclic ladder needs m >= 8, got {}", m));
    std::vector<Edge> edges;
    for (int c = 0; c < m; ++c) {
        edges.emplace_back(c, m + c);
        edges.emplace_back(c, (c + 1) % m);
        edges.emplace_back(m + c, m + (c + 1) % m);
    }
    Graph g(2 * m, edges);
    std::optional<VertexSet> code;
    if (m % 8 == 0) {
        auto meta = fixture_json("ladder_pattern.json");
        const int period = meta["period"];
        std::vector<Vertex> out;
        for (const auto& cell : meta["nondetectors"])
            for (int c = cell[1].get<int>(); c < m; c += period) out.push_back(cell[0].get<int>() * m + c);
        std::sort(out.begin(), out.end());
        code = complement(g, out);
    }
    auto c = certify(fmt::format("ladder(m={})", m), g, code);
    require_cubic_family(c);
    return c;
}

CertifiedConstruction make_hex_torus(int rows, int cols) {
    if (rows < 2 || cols < 4 || rows % 2 != 0 || cols % 2 != 0 || rows * cols < 24)
        throw FamilyError(
            fmt::format("hex torus needs even rows >= 2, even cols >= 4 and rows*cols >= 24, got {}x{}", rows, cols));
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            edges.emplace_back(id(r, c), id(r, (c + 1) % cols));
            if ((r + c) % 2 == 0) edges.emplace_back(id(r, c), id((r + 1) % rows, c));
        }
    Graph g;
    try {
        g = Graph(rows * cols, edges);
    } catch (const GraphError& e) {
        throw FamilyError(fmt::format("hex torus {}x{} is not simple: {}", rows, cols, e.what()));
    }
    if (!find_triangles(g).empty() || !find_twins(g).empty())
        throw FamilyError(fmt::format("hex torus {}x{} has triangles or twins", rows, cols));
    std::optional<VertexSet> code;
    auto meta = fixture_json("hex_pattern.json");
    const int period = meta["period"];
    if (cols % period == 0) {
        std::vector<Vertex> out;
        for (int r = 0; r < rows; ++r)
            for (const auto& cell : meta["nondetectors"])
                if (cell[0].get<int>() == r % 2)
                    for (int c = cell[1].get<int>(); c < cols; c += period) out.push_back(id(r, c));
        std::sort(out.begin(), out.end());
        code = complement(g, out);
    }
    auto c = certify(fmt::format("hex({}x{})", rows, cols), g, code);
    require_cubic_family(c);
    return c;
}

CertifiedConstruction make_family(std::string_view name, const FamilyParams& p) {
    if (name == "g1") return make_small_graph(SmallGraph::G1);
    if (name == "g2") return make_small_graph(SmallGraph::G2);
    if (name == "g6") return make_g6_family(p.k, true);
    if (name == "g6-straight") return make_g6_family(p.k, false);
    if (name == "g18") return make_g18_family(p.k);
    if (name == "g20") return load_g20();
    if (name == "ladder") return make_cyclic_ladder(p.m);
    if (name == "hex") return make_hex_torus(p.rows, p.cols);
    throw FamilyError(fmt::format("unknown family '{}' (expected g1, g2, g6, g6-straight, g18, g20, ladder, hex)", name));
}

nlohmann::json construction_side_file(const CertifiedConstruction& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["n"] = c.graph.n();
    j["m"] = c.graph.num_edges();
    j["labels"] = c.labels;
    j["code"] = c.code ? nlohmann::json(*c.code) : nlohmann::json(nullptr);
    j["claimed_size"] = c.claimed_size ? nlohmann::json(*c.claimed_size) : nlohmann::json(nullptr);
    auto d = c.claimed_density();
    j["claimed_density"] = d ? nlohmann::json(d->str()) : nlohmann::json(nullptr);
    return j;
}

}  // namespace errcode
