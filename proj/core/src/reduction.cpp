#include "errcode/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <fmt/format.h>

#include "errcode/codes.hpp"

namespace errcode {

namespace {

// Variable gadget: x=0, x̄=1, y=2, z=3, 4..9 internal. Vertices 2, 8 and 9
// have degree 2, so their closed neighbourhoods put 2..9 into every code.
// y and z differ exactly on {x, x̄, 5, 7}.
constexpr Edge kVarEdges[] = {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 6}, {2, 3}, {2, 5}, {3, 7},
                              {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 8}, {6, 9}, {7, 9}};

// Clause gadget: c=0, d=1, u=2, w=3, h1..h4=4..7. The degree-2 vertices d,
// h1 and h3 force the whole block; c and d differ only on {u, w} plus the
// literal neighbours of c.
constexpr Edge kClauseEdges[] = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {4, 5},
                                 {6, 7}, {6, 3}, {5, 7}, {2, 7}, {3, 5}};

static_assert(std::size(kVarEdges) == 15);
static_assert(std::size(kClauseEdges) == 10);

bool parse_long(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

void validate(const Formula& f) {
    if (f.num_vars < 1) throw FormulaError("formula needs at least one variable");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& c = f.clauses[j];
        for (int i = 0; i < 3; ++i) {
            if (c[i].var < 1 || c[i].var > f.num_vars)
                throw FormulaError(fmt::format("clause {}: variable {} out of range 1..{}", j + 1, c[i].var, f.num_vars));
            for (int k = 0; k < i; ++k)
                if (c[k].var == c[i].var)
                    throw FormulaError(fmt::format("clause {}: repeated variable {}", j + 1, c[i].var));
        }
    }
}

Formula parse_dimacs(std::string_view text) {
    Formula f;
    bool have_header = false;
    long long declared = 0;
    std::vector<Literal> pending;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt_tok, n_tok, m_tok, extra;
            long long n = 0;
            if (have_header) throw FormulaError(fmt::format("line {}: duplicate header", lineno));
            if (!(in >> fmt_tok >> n_tok >> m_tok) || fmt_tok != "cnf" || (in >> extra) || !parse_long(n_tok, n) ||
                !parse_long(m_tok, declared) || n < 1 || declared < 0)
                throw FormulaError(fmt::format("line {}: malformed header, expected \"p cnf N M\"", lineno));
            f.num_vars = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) throw FormulaError(fmt::format("line {}: clause before \"p cnf\" header", lineno));
        do {
            long long lit = 0;
            if (!parse_long(tok, lit)) throw FormulaError(fmt::format("line {}: bad literal '{}'", lineno, tok));
            if (lit == 0) {
                if (pending.size() != 3)
                    throw FormulaError(fmt::format("line {}: clause has {} literals, expected 3", lineno, pending.size()));
                Clause c{pending[0], pending[1], pending[2]};
                for (int i = 0; i < 3; ++i)
                    for (int k = 0; k < i; ++k)
                        if (c[k].var == c[i].var)
                            throw FormulaError(fmt::format("line {}: repeated variable {} in clause", lineno, c[i].var));
                f.clauses.push_back(c);
                pending.clear();
                continue;
            }
            long long var = lit < 0 ? -lit : lit;
            if (var > f.num_vars)
                throw FormulaError(fmt::format("line {}: variable {} exceeds declared {}", lineno, var, f.num_vars));
            pending.push_back({static_cast<int>(var), lit > 0});
        } while (in >> tok);
    }
    if (!have_header) throw FormulaError("missing \"p cnf N M\" header");
    if (!pending.empty()) throw FormulaError("last clause is not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw FormulaError(fmt::format("header declares {} clauses but {} were read", declared, f.clauses.size()));
    validate(f);
    return f;
}

std::string format_dimacs(const Formula& f) {
    std::string out = fmt::format("p cnf {} {}\n", f.num_vars, f.clauses.size());
    for (const auto& c : f.clauses)
        out += fmt::format("{} {} {} 0\n", c[0].positive ? c[0].var : -c[0].var, c[1].positive ? c[1].var : -c[1].var,
                           c[2].positive ? c[2].var : -c[2].var);
    return out;
}

ReductionInstance build_reduction(const Formula& f) {
    validate(f);
    const int N = f.num_vars;
    const int M = static_cast<int>(f.clauses.size());
    const int n = kVarBlock * N + kClauseBlock * M;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(15 * N + 13 * M));

    ReductionInstance inst;
    for (int i = 0; i < N; ++i) {
        const int base = kVarBlock * i;
        for (auto [u, v] : kVarEdges) edges.emplace_back(base + u, base + v);
        inst.literal_map.emplace_back(base + var_offset::x, base + var_offset::x_bar);
        std::vector<Vertex> block(kVarBlock);
        for (int k = 0; k < kVarBlock; ++k) block[k] = base + k;
        inst.variable_blocks.push_back(std::move(block));
        for (int k = 0; k < kVarBlock; ++k)
            if (k != var_offset::x && k != var_offset::x_bar) inst.forced_detectors.push_back(base + k);
    }
    for (int j = 0; j < M; ++j) {
        const int base = kVarBlock * N + kClauseBlock * j;
        for (auto [u, v] : kClauseEdges) edges.emplace_back(base + u, base + v);
        for (const auto& lit : f.clauses[j]) {
            auto [x, xb] = inst.literal_map[lit.var - 1];
            edges.emplace_back(base + clause_offset::c, lit.positive ? x : xb);
        }
        std::vector<Vertex> block(kClauseBlock);
        for (int k = 0; k < kClauseBlock; ++k) block[k] = base + k;
        for (int k = 0; k < kClauseBlock; ++k) inst.forced_detectors.push_back(base + k);
        inst.clause_blocks.push_back(std::move(block));
    }
    inst.graph = Graph(n, edges);
    inst.K = 9 * N + 8 * M;
    std::sort(inst.forced_detectors.begin(), inst.forced_detectors.end());
    return inst;
}

bool satisfies(const Formula& f, const std::vector<bool>& a) {
    if (static_cast<int>(a.size()) != f.num_vars) return false;
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a[l.var - 1] == l.positive; });
    });
}

std::optional<std::vector<bool>> sat_bruteforce(const Formula& f) {
    validate(f);
    if (f.num_vars > kSatBruteforceCap)
        throw FormulaError(fmt::format("sat_bruteforce: {} variables exceeds cap {}", f.num_vars, kSatBruteforceCap));
    const int N = f.num_vars;
    std::vector<bool> a(static_cast<std::size_t>(N));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        for (int i = 0; i < N; ++i) a[i] = (mask >> (N - 1 - i)) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

VertexSet encode_assignment(const ReductionInstance& inst, const std::vector<bool>& assignment) {
    if (assignment.size() != inst.literal_map.size())
        throw std::invalid_argument("encode_assignment: assignment length does not match variable count");
    VertexSet code = inst.forced_detectors;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        code.push_back(assignment[i] ? inst.literal_map[i].first : inst.literal_map[i].second);
    std::sort(code.begin(), code.end());
    return code;
}

std::vector<bool> decode_assignment(const ReductionInstance& inst, const VertexSet& code) {
    if (static_cast<int>(code.size()) != inst.K)
        throw std::invalid_argument(fmt::format("decode_assignment: code size {} differs from K = {}", code.size(), inst.K));
    if (!is_errcode(inst.graph, code)) throw std::invalid_argument("decode_assignment: code is not a valid ERR:IC");
    std::vector<bool> out;
    for (std::size_t i = 0; i < inst.literal_map.size(); ++i) {
        auto [x, xb] = inst.literal_map[i];
        bool has_x = std::binary_search(code.begin(), code.end(), x);
        bool has_xb = std::binary_search(code.begin(), code.end(), xb);
        if (has_x == has_xb)
            throw std::invalid_argument(
                fmt::format("decode_assignment: variable {} has {} literal detectors", i + 1, has_x ? 2 : 0));
        out.push_back(has_x);
    }
    return out;
}

RoundtripReport roundtrip_check(const Formula& f, const SolverOptions& opts) {
    RoundtripReport r;
    auto inst = build_reduction(f);
    r.K = inst.K;
    r.sat = sat_bruteforce(f).has_value();
    auto best = min_errcode(inst.graph, opts);
    if (best) r.min_size = best->size;
    const bool at_threshold = best && best->size == inst.K;
    r.agrees = r.sat == at_threshold;
    if (at_threshold) {
        r.decoded = decode_assignment(inst, best->detectors);
        r.agrees = r.agrees && satisfies(f, *r.decoded);
    }
    return r;
}

nlohmann::json reduction_side_file(const ReductionInstance& inst) {
    nlohmann::json j;
    j["K"] = inst.K;
    j["n"] = inst.graph.n();
    j["m"] = inst.graph.num_edges();
    auto& lm = j["literal_map"] = nlohmann::json::array();
    for (std::size_t i = 0; i < inst.literal_map.size(); ++i)
        lm.push_back({{"var", i + 1}, {"x", inst.literal_map[i].first}, {"x_bar", inst.literal_map[i].second}});
    j["gadget_map"] = {{"variables", inst.variable_blocks}, {"clauses", inst.clause_blocks}};
    j["layout"] = {{"variable_block", {{"size", kVarBlock}, {"x", var_offset::x}, {"x_bar", var_offset::x_bar},
                                       {"y", var_offset::y}, {"z", var_offset::z}}},
                   {"clause_block", {{"size", kClauseBlock}, {"c", clause_offset::c}, {"d", clause_offset::d}}}};
    j["forced_detectors"] = inst.forced_detectors;
    return j;
}

}  // namespace errcode
