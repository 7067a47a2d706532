#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include <fmt/format.h>

#include "errcode/solver.hpp"

namespace errcode {

std::vector<RivalQuadruple> find_rivals(const Graph& g) {
    std::vector<RivalQuadruple> out;
    for (Vertex p = 0; p < g.n(); ++p)
        for (Vertex q = p + 1; q < g.n(); ++q) {
            std::vector<Vertex> common;
            std::set_intersection(g.neighbors(p).begin(), g.neighbors(p).end(), g.neighbors(q).begin(),
                                  g.neighbors(q).end(), std::back_inserter(common));
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    Vertex a = common[i], b = common[j];
                    for (Vertex pf : g.neighbors(p)) {
                        if (pf == a || pf == b || pf == q) continue;
                        for (Vertex qf : g.neighbors(q)) {
                            if (qf == a || qf == b || qf == p) continue;
                            out.push_back({p, q, pf, qf, a, b});
                        }
                    }
                }
        }
    return out;
}

void require_cubic_code_graph(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3)
            throw PreconditionError(fmt::format("graph is not cubic: vertex {} has degree {}", v, g.degree(v)));
    auto tw = find_twins(g);
    if (!tw.empty()) throw PreconditionError(fmt::format("graph has twins {} and {}", tw[0].u, tw[0].v));
    auto tri = find_triangles(g);
    if (!tri.empty())
        throw PreconditionError(fmt::format("graph has triangle {} {} {}", tri[0].a, tri[0].b, tri[0].c));
}

bool nondetector_conditions_hold(const Graph& g, const VertexSet& nondetectors) {
    std::vector<char> out(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : nondetectors) out[v] = 1;
    for (Vertex v : nondetectors) {
        auto d = bfs_distances(g, v);
        for (Vertex w : nondetectors)
            if (w != v && d[w] >= 0 && d[w] < 4) return false;
    }
    for (const auto& r : find_rivals(g))
        if (r.p_friend != r.q_friend && out[r.p_friend] && out[r.q_friend]) return false;
    return true;
}

namespace {

class Bits {
public:
    explicit Bits(int n = 0) : w_(static_cast<std::size_t>((n + 63) / 64), 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    int lowest() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& minus(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::uint64_t x = w_[i]; x; x &= x - 1) f(static_cast<int>(i * 64) + std::countr_zero(x));
    }

private:
    std::vector<std::uint64_t> w_;
};

// Maximum independent set in the conflict graph (distance < 4 pairs and
// friend pairs), with a greedy clique-cover bound.
class Packing {
public:
    Packing(std::vector<Bits> adj, std::int64_t budget) : adj_(std::move(adj)), budget_(budget) {}

    std::int64_t nodes() const { return nodes_; }

    // Best set inside cand strictly larger than `floor`; empty result when
    // none exists.
    std::vector<int> maximum(const Bits& cand, int floor) {
        best_ = floor;
        best_set_.clear();
        found_ = false;
        stop_at_ = -1;
        std::vector<int> cur;
        dfs(cand, cur);
        return found_ ? best_set_ : std::vector<int>{};
    }

    // Any set of exactly `target` inside cand.
    bool reach(const Bits& cand, int target, std::vector<int>& out) {
        best_ = target - 1;
        best_set_.clear();
        found_ = false;
        stop_at_ = target;
        std::vector<int> cur;
        dfs(cand, cur);
        if (found_) out = best_set_;
        return found_;
    }

private:
    int cover_bound(Bits r) const {
        int k = 0;
        for (int u = r.lowest(); u >= 0; u = r.lowest()) {
            r.reset(u);
            Bits q = r;
            q &= adj_[u];
            for (int w = q.lowest(); w >= 0; w = q.lowest()) {
                r.reset(w);
                q.reset(w);
                q &= adj_[w];
            }
            ++k;
        }
        return k;
    }

    void dfs(const Bits& cand, std::vector<int>& cur) {
        if (++nodes_ > budget_ && budget_ > 0)
            throw BudgetExceeded(fmt::format("complement search node budget {} exceeded", budget_), 0, -1);
        if (stop_at_ >= 0 && found_) return;
        const int size = static_cast<int>(cur.size());
        if (cand.none()) {
            if (size > best_) {
                best_ = size;
                best_set_ = cur;
                found_ = true;
            }
            return;
        }
        if (size + cover_bound(cand) <= best_) return;
        int v = -1, vdeg = -1;
        cand.for_each([&](int u) {
            int d = cand.count_and(adj_[u]);
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        });
        Bits with = cand;
        with.reset(v);
        with.minus(adj_[v]);
        cur.push_back(v);
        dfs(with, cur);
        cur.pop_back();
        if (vdeg == 0 || (stop_at_ >= 0 && found_)) return;
        Bits without = cand;
        without.reset(v);
        dfs(without, cur);
    }

    std::vector<Bits> adj_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    int best_ = 0;
    int stop_at_ = -1;
    bool found_ = false;
    std::vector<int> best_set_;
};

std::vector<Bits> conflict_graph(const Graph& g) {
    const int n = g.n();
    std::vector<Bits> adj(static_cast<std::size_t>(n), Bits(n));
    for (Vertex v = 0; v < n; ++v) {
        auto d = bfs_distances(g, v);
        for (Vertex w = 0; w < n; ++w)
            if (w != v && d[w] >= 0 && d[w] < 4) adj[v].set(w);
    }
    for (const auto& r : find_rivals(g))
        if (r.p_friend != r.q_friend) {
            adj[r.p_friend].set(r.q_friend);
            adj[r.q_friend].set(r.p_friend);
        }
    return adj;
}

}  // namespace

OptimalCode max_nondetectors_cubic(const Graph& g, const SolverOptions& opts) {
    require_cubic_code_graph(g);
    const int n = g.n();
    auto adj = conflict_graph(g);
    Packing pk(adj, opts.node_budget);

    Bits all(n);
    for (Vertex v = 0; v < n; ++v) all.set(v);
    auto witness = pk.maximum(all, 0);
    const int opt = static_cast<int>(witness.size());

    // Keep each vertex as a detector whenever an optimal packing survives
    // without it; this yields the lexicographically smallest code.
    Bits cand = all;
    std::vector<int> chosen;
    for (Vertex v = 0; v < n; ++v) {
        if (!cand.test(v)) continue;
        std::sort(witness.begin(), witness.end());
        if (!std::binary_search(witness.begin(), witness.end(), v)) {
            cand.reset(v);
            continue;
        }
        Bits without = cand;
        without.reset(v);
        std::vector<int> alt;
        const int need = opt - static_cast<int>(chosen.size());
        if (pk.reach(without, need, alt)) {
            alt.insert(alt.end(), chosen.begin(), chosen.end());
            witness = std::move(alt);
            cand = without;
            continue;
        }
        chosen.push_back(v);
        cand.reset(v);
        cand.minus(adj[v]);
    }

    std::sort(chosen.begin(), chosen.end());
    OptimalCode out;
    out.detectors = complement(g, chosen);
    out.size = static_cast<int>(out.detectors.size());
    out.method = SolveMethod::complement_search;
    out.nodes_explored = pk.nodes();
    return out;
}

std::vector<LemmaViolation> cubic_lemma_violations(const Graph& g, const VertexSet& code) {
    std::vector<LemmaViolation> out;
    if (g.n() == 0 || !g.is_regular(3)) return out;
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : code) in[v] = 1;

    for (Vertex v = 0; v < g.n(); ++v) {
        if (in[v]) continue;
        for (Vertex w : ball(g, v, 3))
            if (w != v && !in[w]) out.push_back({LemmaViolation::Kind::ball3, {v, w}});
    }

    std::set<std::vector<Vertex>> cycles;
    for (const auto& r : find_rivals(g)) {
        std::vector<Vertex> cyc{r.p, r.a, r.q, r.b};
        auto key = cyc;
        std::sort(key.begin(), key.end());
        if (!cycles.insert(key).second) continue;
        std::vector<Vertex> outside;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            Vertex prev = cyc[(i + 3) % 4], next = cyc[(i + 1) % 4];
            std::vector<Vertex> rest;
            for (Vertex w : g.neighbors(cyc[i]))
                if (w != prev && w != next) rest.push_back(w);
            if (rest.size() != 1 || std::find(key.begin(), key.end(), rest[0]) != key.end()) ok = false;
            else outside.push_back(rest[0]);
        }
        if (!ok) continue;
        auto uniq = outside;
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) continue;
        int hits = 0;
        for (Vertex v : cyc) hits += in[v];
        for (Vertex v : outside) hits += in[v];
        if (hits < 7) {
            auto w = cyc;
            w.insert(w.end(), outside.begin(), outside.end());
            out.push_back({LemmaViolation::Kind::four_cycle, w});
        }
    }
    return out;
}

}  // namespace errcode
