#include "errcode/codes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

namespace errcode {

std::string_view to_string(CodeKind k) {
    switch (k) {
        case CodeKind::IC: return "IC";
        case CodeKind::RED_IC: return "RED:IC";
        case CodeKind::DET_IC: return "DET:IC";
        case CodeKind::ERR_IC: return "ERR:IC";
    }
    return "?";
}

CodeKind parse_code_kind(std::string_view s) {
    std::string t;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "ic") return CodeKind::IC;
    if (t == "red" || t == "redic") return CodeKind::RED_IC;
    if (t == "det" || t == "detic") return CodeKind::DET_IC;
    if (t == "err" || t == "erric") return CodeKind::ERR_IC;
    throw std::invalid_argument(fmt::format("unknown code kind '{}' (expected ic, red, det or err)", s));
}

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.n()) throw GraphError(fmt::format("detector {} out of range [0,{})", v, g.n()));
        in[v] = 1;
    }
    return in;
}

// N_S[v] as a sorted list.
std::vector<Vertex> closed_in(const Graph& g, const std::vector<char>& in, Vertex v) {
    std::vector<Vertex> out;
    bool placed = false;
    for (Vertex w : g.neighbors(v)) {
        if (!placed && v < w) {
            if (in[v]) out.push_back(v);
            placed = true;
        }
        if (in[w]) out.push_back(w);
    }
    if (!placed && in[v]) out.push_back(v);
    return out;
}

struct Split {
    int u_only = 0, v_only = 0;
};

Split split(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    Split r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            ++r.u_only;
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            ++r.v_only;
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return r;
}

int required_domination(CodeKind k) {
    switch (k) {
        case CodeKind::IC: return 1;
        case CodeKind::RED_IC: return 2;
        case CodeKind::DET_IC: return 2;
        case CodeKind::ERR_IC: return 3;
    }
    return 0;
}

bool pair_ok(CodeKind k, const Split& sp) {
    switch (k) {
        case CodeKind::IC: return sp.u_only + sp.v_only >= 1;
        case CodeKind::RED_IC: return sp.u_only + sp.v_only >= 2;
        case CodeKind::DET_IC: return sp.u_only >= 2 || sp.v_only >= 2;
        case CodeKind::ERR_IC: return sp.u_only + sp.v_only >= 3;
    }
    return false;
}

int required_distinguishing(CodeKind k) {
    switch (k) {
        case CodeKind::IC: return 1;
        case CodeKind::RED_IC: return 2;
        case CodeKind::DET_IC: return 2;  // on one side
        case CodeKind::ERR_IC: return 3;
    }
    return 0;
}

}  // namespace

int domination_count(const Graph& g, const VertexSet& s, Vertex v) {
    auto in = membership(g, s);
    return static_cast<int>(closed_in(g, in, v).size());
}

int distinguishing_count(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("distinguishing_count requires distinct vertices");
    auto in = membership(g, s);
    auto sp = split(closed_in(g, in, u), closed_in(g, in, v));
    return sp.u_only + sp.v_only;
}

VerificationReport verify_code(const Graph& g, const VertexSet& s, CodeKind kind) {
    auto in = membership(g, s);
    VerificationReport rep;
    std::vector<std::vector<Vertex>> ns(static_cast<std::size_t>(g.n()));
    const int dom_req = required_domination(kind);
    for (Vertex v = 0; v < g.n(); ++v) {
        ns[v] = closed_in(g, in, v);
        int c = static_cast<int>(ns[v].size());
        if (c < dom_req) rep.domination_failures.push_back({v, c, dom_req});
    }
    const int dist_req = required_distinguishing(kind);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            auto sp = split(ns[u], ns[v]);
            if (!pair_ok(kind, sp))
                rep.distinguishing_failures.push_back({u, v, sp.u_only + sp.v_only, sp.u_only, sp.v_only, dist_req});
        }
    rep.valid = rep.domination_failures.empty() && rep.distinguishing_failures.empty();
    return rep;
}

bool is_errcode(const Graph& g, const VertexSet& s) {
    auto in = membership(g, s);
    std::vector<std::vector<Vertex>> ns(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        ns[v] = closed_in(g, in, v);
        if (ns[v].size() < 3) return false;
    }
    // Pairs with disjoint closed neighbourhoods are at least 6-distinguished
    // once domination holds, so only pairs within distance 2 need checking.
    std::vector<int> mark(static_cast<std::size_t>(g.n()), -1);
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex a : closed_neighborhood(g, u))
            for (Vertex v : closed_neighborhood(g, a))
                if (v > u && mark[v] != u) {
                    mark[v] = u;
                    auto sp = split(ns[u], ns[v]);
                    if (sp.u_only + sp.v_only < 3) return false;
                }
    }
    return true;
}

Rational share(const Graph& g, const VertexSet& s, Vertex v) {
    auto in = membership(g, s);
    if (v < 0 || v >= g.n() || !in[v]) throw std::invalid_argument(fmt::format("share: vertex {} is not a detector", v));
    Rational total;
    for (Vertex u : closed_neighborhood(g, v)) {
        auto c = static_cast<std::int64_t>(closed_in(g, in, u).size());
        if (c == 0) throw std::invalid_argument(fmt::format("share: vertex {} is not dominated", u));
        total += Rational(1, c);
    }
    return total;
}

}  // namespace errcode
