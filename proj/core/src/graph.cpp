#include "errcode/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace errcode {

Graph::Graph(int n) {
    if (n < 0) throw GraphError(fmt::format("negative vertex count {}", n));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError(fmt::format("edge {}-{}: vertex out of range [0,{})", u, v, n));
        if (u == v) throw GraphError(fmt::format("edge {}-{}: self-loop", u, v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw GraphError(fmt::format("duplicate edge {}-{}", static_cast<int>(&nb - adj_.data()), *dup));
    }
    m_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n() == 0 ? 0 : degree(0);
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::is_regular(int k) const {
    return std::all_of(adj_.begin(), adj_.end(), [k](const auto& nb) { return static_cast<int>(nb.size()) == k; });
}

int Graph::regular_degree() const {
    if (n() == 0) return -1;
    return is_regular(degree(0)) ? degree(0) : -1;
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> ids) {
    for (Vertex v : ids)
        if (v < 0 || v >= g.n()) throw GraphError(fmt::format("vertex {} out of range [0,{})", v, g.n()));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

VertexSet complement(const Graph& g, const VertexSet& s) {
    VertexSet out;
    std::size_t j = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (j < s.size() && s[j] == v) {
            ++j;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;  // (line number, content)
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        auto line = text.substr(pos, nl - pos);
        if (!split_ws(line).empty()) lines.emplace_back(lineno, line);
        pos = nl + 1;
    }
    if (lines.empty()) throw GraphError("line 1: missing header \"n m\"");

    auto [hline, htext] = lines.front();
    auto htoks = split_ws(htext);
    long long n = 0, m = 0;
    if (htoks.size() != 2 || !parse_int(htoks[0], n) || !parse_int(htoks[1], m) || n < 0 || m < 0)
        throw GraphError(fmt::format("line {}: malformed header, expected \"n m\"", hline));
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw GraphError(fmt::format("line {}: header declares {} edges but {} edge lines follow", hline, m,
                                     lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [ln, body] = lines[i];
        auto toks = split_ws(body);
        long long u = 0, v = 0;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw GraphError(fmt::format("line {}: malformed edge, expected \"u v\"", ln));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError(fmt::format("line {}: vertex out of range [0,{})", ln, n));
        if (u == v) throw GraphError(fmt::format("line {}: self-loop on vertex {}", ln, u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second) throw GraphError(fmt::format("line {}: duplicate edge {} {}", ln, u, v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
    std::string out = fmt::format("{} {}\n", g.n(), g.num_edges());
    for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(fmt::format("cannot open graph file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_graph(ss.str());
    } catch (const GraphError& e) {
        throw GraphError(fmt::format("{}: {}", path, e.what()));
    }
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw GraphError(fmt::format("cannot write graph file '{}'", path));
    out << format_graph(g);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int Distance::value() const {
    if (is_infinite()) throw std::logic_error("value() of infinite distance");
    return d_;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return a.d_ <=> b.d_;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
    int d = bfs_distances(g, u).at(v);
    return d < 0 ? Distance::infinite() : Distance(d);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

Distance diameter(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        for (int d : bfs_distances(g, v)) {
            if (d < 0) return Distance::infinite();
            best = std::max(best, d);
        }
    return Distance(best);
}

VertexSet ball(const Graph& g, Vertex v, int r) {
    VertexSet out;
    auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < g.n(); ++u)
        if (dist[u] >= 0 && dist[u] <= r) out.push_back(u);
    return out;
}

std::vector<Twin> find_twins(const Graph& g) {
    std::vector<Twin> out;
    for (Vertex u = 0; u < g.n(); ++u) {
        auto cu = closed_neighborhood(g, u);
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (g.degree(u) != g.degree(v)) continue;
            if (g.neighbors(u) == g.neighbors(v))
                out.push_back({u, v, TwinKind::open});
            else if (cu == closed_neighborhood(g, v))
                out.push_back({u, v, TwinKind::closed});
        }
    }
    return out;
}

std::vector<Triangle> find_triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b))
                if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
        }
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) throw GraphError("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), edges);
}

std::vector<std::vector<int>> distance_profile(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<int> hist(static_cast<std::size_t>(g.n()) + 1, 0);
        for (int d : bfs_distances(g, v)) ++hist[d < 0 ? g.n() : d];
        out.push_back(std::move(hist));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace errcode
