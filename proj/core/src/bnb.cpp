#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "errcode/existence.hpp"
#include "errcode/solver.hpp"

namespace errcode {

namespace {

// Every ERR:IC requirement has the form "at least 3 detectors in T":
// T = N[v] for domination, T = N[u] xor N[v] for distinguishing. Pairs with
// disjoint closed neighbourhoods are implied by domination and are skipped.
struct Model {
    int n = 0;
    std::vector<std::vector<Vertex>> members;
    std::vector<std::vector<int>> of;
    std::vector<int> bound_order;            // constraints by increasing size
    std::vector<std::vector<Vertex>> ball3;  // cubic graphs only
    bool trivially_infeasible = false;
};

Model build_model(const Graph& g, bool use_ball3) {
    Model m;
    m.n = g.n();
    std::set<std::vector<Vertex>> seen;
    auto add = [&](std::vector<Vertex> t) {
        if (t.size() < 3) m.trivially_infeasible = true;
        if (seen.insert(t).second) m.members.push_back(std::move(t));
    };
    std::vector<VertexSet> closed(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        closed[v] = closed_neighborhood(g, v);
        add(closed[v]);
    }
    std::vector<int> mark(static_cast<std::size_t>(g.n()), -1);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex a : closed[u])
            for (Vertex v : closed[a])
                if (v > u && mark[v] != u) {
                    mark[v] = u;
                    std::vector<Vertex> t;
                    std::set_symmetric_difference(closed[u].begin(), closed[u].end(), closed[v].begin(),
                                                  closed[v].end(), std::back_inserter(t));
                    add(std::move(t));
                }
    m.of.resize(static_cast<std::size_t>(g.n()));
    for (int c = 0; c < static_cast<int>(m.members.size()); ++c)
        for (Vertex v : m.members[c]) m.of[v].push_back(c);
    m.bound_order.resize(m.members.size());
    for (int c = 0; c < static_cast<int>(m.members.size()); ++c) m.bound_order[c] = c;
    std::stable_sort(m.bound_order.begin(), m.bound_order.end(),
                     [&](int a, int b) { return m.members[a].size() < m.members[b].size(); });
    if (use_ball3) {
        m.ball3.resize(static_cast<std::size_t>(g.n()));
        for (Vertex v = 0; v < g.n(); ++v)
            for (Vertex w : ball(g, v, 3))
                if (w != v) m.ball3[v].push_back(w);
    }
    return m;
}

struct Shared {
    std::atomic<int> best;
    std::atomic<std::int64_t> nodes{0};
    std::int64_t budget = 0;
    int unsolved = 0;  // value of best while no solution is known
    std::mutex mu;
    VertexSet witness;
};

class Search {
public:
    explicit Search(const Model& m) : m_(m) {
        const auto nc = m.members.size();
        st_.assign(static_cast<std::size_t>(m.n), -1);
        in_.assign(nc, 0);
        unk_.resize(nc);
        for (std::size_t c = 0; c < nc; ++c) unk_[c] = static_cast<int>(m.members[c].size());
        unsat_ = static_cast<int>(nc);
        stamp_.assign(static_cast<std::size_t>(m.n), 0);
    }

    // Forces everything implied before any decision; false if infeasible.
    bool init() {
        for (std::size_t c = 0; c < m_.members.size(); ++c) {
            if (unk_[c] < 3) return false;
            if (unk_[c] == 3) pending_c_.push_back(static_cast<int>(c));
        }
        return propagate();
    }

    bool decide(Vertex v, int val) { return set(v, val) && propagate(); }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            Vertex v = trail_.back();
            trail_.pop_back();
            const int val = st_[v];
            for (int c : m_.of[v]) {
                ++unk_[c];
                if (val == 1) {
                    if (in_[c] == 3) ++unsat_;
                    --in_[c];
                }
            }
            if (val == 1) --n_in_;
            st_[v] = -1;
        }
        pending_c_.clear();
        pending_v_.clear();
    }

    int state(Vertex v) const { return st_[v]; }
    int n_in() const { return n_in_; }
    bool satisfied() const { return unsat_ == 0; }

    VertexSet in_set() const {
        VertexSet out;
        for (Vertex v = 0; v < m_.n; ++v)
            if (st_[v] == 1) out.push_back(v);
        return out;
    }

    // Disjoint packing of unmet requirements over undecided vertices.
    int lower_bound() {
        ++epoch_;
        int lb = 0;
        for (int c : m_.bound_order) {
            if (in_[c] >= 3) continue;
            bool free = true;
            for (Vertex v : m_.members[c])
                if (st_[v] == -1 && stamp_[v] == epoch_) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (Vertex v : m_.members[c])
                if (st_[v] == -1) stamp_[v] = epoch_;
            lb += 3 - in_[c];
        }
        return lb;
    }

    // Undecided vertex in the most unmet requirements, ties by smallest id.
    Vertex branch_vertex() const {
        Vertex best = -1;
        int best_score = -1;
        for (Vertex v = 0; v < m_.n; ++v) {
            if (st_[v] != -1) continue;
            int score = 0;
            for (int c : m_.of[v])
                if (in_[c] < 3) ++score;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

private:
    bool set(Vertex v, int val) {
        if (st_[v] == val) return true;
        if (st_[v] != -1) return false;
        st_[v] = static_cast<signed char>(val);
        trail_.push_back(v);
        bool ok = true;
        for (int c : m_.of[v]) {
            --unk_[c];
            if (val == 1) {
                if (++in_[c] == 3) --unsat_;
            } else {
                const int room = in_[c] + unk_[c];
                if (room < 3) ok = false;
                else if (room == 3 && unk_[c] > 0 && in_[c] < 3) pending_c_.push_back(c);
            }
        }
        if (val == 1) ++n_in_;
        else if (!m_.ball3.empty())
            for (Vertex w : m_.ball3[v]) pending_v_.push_back(w);
        return ok;
    }

    bool propagate() {
        while (!pending_c_.empty() || !pending_v_.empty()) {
            if (!pending_v_.empty()) {
                Vertex w = pending_v_.back();
                pending_v_.pop_back();
                if (!set(w, 1)) return false;
                continue;
            }
            int c = pending_c_.back();
            pending_c_.pop_back();
            for (Vertex u : m_.members[c])
                if (st_[u] == -1 && !set(u, 1)) return false;
        }
        return true;
    }

    const Model& m_;
    std::vector<signed char> st_;
    std::vector<int> in_, unk_;
    int unsat_ = 0;
    int n_in_ = 0;
    std::vector<Vertex> trail_;
    std::vector<int> pending_c_;
    std::vector<Vertex> pending_v_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
};

void count_node(Shared& sh) {
    auto n = sh.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (sh.budget > 0 && n > sh.budget) {
        int ub = sh.best.load();
        throw BudgetExceeded(fmt::format("branch-and-bound node budget {} exceeded", sh.budget), 0,
                             ub == sh.unsolved ? -1 : ub);
    }
}

// Finds a solution strictly smaller than sh.best, updating it in place.
void optimize(Search& s, Shared& sh) {
    count_node(sh);
    if (s.satisfied()) {
        std::lock_guard lock(sh.mu);
        if (s.n_in() < sh.best.load()) {
            sh.best.store(s.n_in());
            sh.witness = s.in_set();
        }
        return;
    }
    if (s.n_in() + s.lower_bound() >= sh.best.load()) return;
    Vertex v = s.branch_vertex();
    for (int val : {0, 1}) {
        auto mk = s.mark();
        if (s.decide(v, val)) optimize(s, sh);
        s.undo(mk);
    }
}

// Any solution of size <= limit from the current state; the state is
// restored on return.
bool feasible(Search& s, Shared& sh, int limit, VertexSet& out) {
    count_node(sh);
    if (s.satisfied()) {
        if (s.n_in() > limit) return false;
        out = s.in_set();
        return true;
    }
    if (s.n_in() + s.lower_bound() > limit) return false;
    Vertex v = s.branch_vertex();
    for (int val : {0, 1}) {
        auto mk = s.mark();
        bool found = s.decide(v, val) && feasible(s, sh, limit, out);
        s.undo(mk);
        if (found) return true;
    }
    return false;
}

using Prefix = std::vector<std::pair<Vertex, int>>;

// Open subtrees down to the first depth that yields enough work items.
std::vector<Prefix> split_tree(const Model& m, int want) {
    std::vector<Prefix> frontier{Prefix{}};
    for (int depth = 0; depth < 16 && static_cast<int>(frontier.size()) < want; ++depth) {
        std::vector<Prefix> next;
        for (const auto& p : frontier) {
            Search s(m);
            bool ok = s.init();
            for (auto [v, val] : p) ok = ok && s.decide(v, val);
            if (!ok) continue;
            if (s.satisfied()) {
                next.push_back(p);
                continue;
            }
            Vertex v = s.branch_vertex();
            for (int val : {0, 1}) {
                auto mk = s.mark();
                if (s.decide(v, val)) {
                    auto q = p;
                    q.emplace_back(v, val);
                    next.push_back(std::move(q));
                }
                s.undo(mk);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

}  // namespace

std::optional<VertexSet> root_forced_detectors(const Graph& g) {
    Model m = build_model(g, false);
    if (m.trivially_infeasible) return std::nullopt;
    Search s(m);
    if (!s.init()) return std::nullopt;
    return s.in_set();
}

std::optional<OptimalCode> min_errcode(const Graph& g, const SolverOptions& opts) {
    if (!check_existence(g).exists) return std::nullopt;
    const bool cubic = g.is_regular(3) && g.n() > 0;
    Model m = build_model(g, cubic);
    if (m.trivially_infeasible) return std::nullopt;

    Shared sh;
    sh.unsolved = g.n() + 1;
    sh.best.store(sh.unsolved);
    sh.budget = opts.node_budget;

    const int threads = opts.threads <= 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                                          : opts.threads;
    if (threads == 1) {
        Search s(m);
        if (!s.init()) return std::nullopt;
        optimize(s, sh);
    } else {
        auto tasks = split_tree(m, threads * 4);
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex fail_mu;
        auto worker = [&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                    Search s(m);
                    bool ok = s.init();
                    for (auto [v, val] : tasks[i]) ok = ok && s.decide(v, val);
                    if (ok) optimize(s, sh);
                }
            } catch (...) {
                std::lock_guard lock(fail_mu);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    if (sh.best.load() == sh.unsolved) return std::nullopt;
    const int opt = sh.best.load();

    // Lexicographically smallest optimum: admit each vertex in turn whenever
    // an optimal completion still exists.
    Search s(m);
    s.init();
    VertexSet witness = sh.witness;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (s.state(v) != -1) continue;
        if (std::binary_search(witness.begin(), witness.end(), v)) {
            s.decide(v, 1);
            continue;
        }
        auto mk = s.mark();
        VertexSet alt;
        if (s.decide(v, 1) && feasible(s, sh, opt, alt)) {
            witness = std::move(alt);
            continue;
        }
        s.undo(mk);
        s.decide(v, 0);
    }

    OptimalCode out;
    out.detectors = s.in_set();
    out.size = static_cast<int>(out.detectors.size());
    out.method = SolveMethod::branch_and_bound;
    out.nodes_explored = sh.nodes.load();
    return out;
}

}  // namespace errcode
