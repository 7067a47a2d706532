#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/graph.hpp"
#include "errcode/reduction.hpp"
#include "errcode/report_json.hpp"
#include "errcode/solver.hpp"

namespace errcode::cli {

namespace {

using json = nlohmann::json;

// Usage and input errors; the message names the offending flag or echoes the
// module error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    int code = kExitOk;
    json doc;
    std::string summary;
};

VertexSet parse_code_list(const Graph& g, const std::string& text) {
    std::vector<Vertex> ids;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto tok = rest.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw UsageError(fmt::format("--code: '{}' is not a vertex id", tok));
        if (v < 0 || v >= g.n()) throw UsageError(fmt::format("--code: vertex {} out of range [0,{})", v, g.n()));
        ids.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) throw UsageError("--code: trailing comma");
    }
    auto set = make_vertex_set(g, ids);
    if (set.size() != ids.size()) throw UsageError("--code: repeated vertex id");
    return set;
}

std::string read_file(const std::string& path, const char* flag) {
    std::ifstream in(path);
    if (!in) throw UsageError(fmt::format("{}: cannot open '{}'", flag, path));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw UsageError(fmt::format("--out: cannot write '{}'", path));
    out << body;
}

json optimal_json(const std::optional<OptimalCode>& c, const Graph& g) {
    json j = to_json(c);
    j["n"] = g.n();
    if (c && g.n() > 0) j["density"] = Rational(c->size, g.n()).str();
    return j;
}

std::optional<OptimalCode> solve_with(const Graph& g, const std::string& method, const SolverOptions& opts) {
    if (method == "oracle") {
        if (g.n() > kOracleCap)
            throw UsageError(fmt::format("--method oracle: n = {} exceeds oracle cap {}", g.n(), kOracleCap));
        return min_errcode_oracle(g);
    }
    if (method == "cubic") {
        try {
            require_cubic_code_graph(g);
        } catch (const PreconditionError& e) {
            throw UsageError(fmt::format("--method cubic: {}", e.what()));
        }
        return max_nondetectors_cubic(g, opts);
    }
    return min_errcode(g, opts);
}

struct Options {
    std::string graph, code, kind = "err", method = "bnb", cnf, out, family;
    int threads = 1;
    std::int64_t node_budget = 0;
    bool roundtrip = false;
    int max_n = kEnumerationCap;
    int k = 2, m = 8, rows = 4, cols = 6;
    std::vector<int> ks, ms, rows_list, cols_list;
};

Result do_verify(const Options& o) {
    Graph g = read_graph_file(o.graph);
    CodeKind kind;
    try {
        kind = parse_code_kind(o.kind);
    } catch (const std::exception& e) {
        throw UsageError(fmt::format("--kind: {}", e.what()));
    }
    auto s = parse_code_list(g, o.code);
    auto rep = verify_code(g, s, kind);
    Result r;
    r.doc = to_json(rep, kind);
    r.doc["code"] = s;
    r.code = rep.valid ? kExitOk : kExitNegative;
    r.summary = fmt::format("{}: code of size {} is {} ({} domination, {} distinguishing failures)",
                            to_string(kind), s.size(), rep.valid ? "valid" : "invalid",
                            rep.domination_failures.size(), rep.distinguishing_failures.size());
    return r;
}

Result do_exist(const Options& o) {
    Graph g = read_graph_file(o.graph);
    auto rep = check_existence(g);
    Result r;
    r.doc = to_json(rep);
    r.code = rep.exists ? kExitOk : kExitNegative;
    std::string failed;
    for (auto p : rep.failed_properties) failed += fmt::format(" {}", to_string(p));
    r.summary = rep.exists ? "ERR:IC exists" : fmt::format("no ERR:IC; failed:{}", failed);
    return r;
}

Result do_solve(const Options& o) {
    Graph g = read_graph_file(o.graph);
    SolverOptions opts{o.threads, o.node_budget};
    Result r;
    try {
        auto best = solve_with(g, o.method, opts);
        r.doc = optimal_json(best, g);
        r.code = best ? kExitOk : kExitNegative;
        r.summary = best ? fmt::format("minimum ERR:IC size {} of n = {} ({})", best->size, g.n(), to_string(best->method))
                         : "NONE: graph admits no ERR:IC";
    } catch (const BudgetExceeded& e) {
        r.doc = {{"exists", nullptr}, {"budget_exceeded", true}, {"lower_bound", e.lower_bound},
                 {"upper_bound", e.upper_bound < 0 ? json(nullptr) : json(e.upper_bound)}};
        r.code = kExitNegative;
        r.summary = e.what();
    }
    return r;
}

Result do_reduce(const Options& o) {
    Formula f;
    try {
        f = parse_dimacs(read_file(o.cnf, "--cnf"));
    } catch (const FormulaError& e) {
        throw UsageError(fmt::format("--cnf {}: {}", o.cnf, e.what()));
    }
    auto inst = build_reduction(f);
    write_graph_file(o.out + ".el", inst.graph);
    auto side = reduction_side_file(inst);
    write_file(o.out + ".json", side.dump(2) + "\n");
    Result r;
    r.doc = {{"graph", o.out + ".el"}, {"side_file", o.out + ".json"}, {"n", inst.graph.n()},
             {"m", inst.graph.num_edges()}, {"K", inst.K}};
    r.summary = fmt::format("wrote {}.el (n = {}, m = {}, K = {})", o.out, inst.graph.n(), inst.graph.num_edges(), inst.K);
    if (o.roundtrip) {
        auto rt = roundtrip_check(f, {o.threads, o.node_budget});
        r.doc["roundtrip"] = to_json(rt);
        r.code = rt.agrees ? kExitOk : kExitNegative;
        r.summary += fmt::format("; roundtrip: sat = {}, min = {}, agrees = {}", rt.sat,
                                 rt.min_size ? std::to_string(*rt.min_size) : "NONE", rt.agrees);
    }
    return r;
}

Result do_gen(const Options& o) {
    CertifiedConstruction c;
    try {
        c = make_family(o.family, {o.k, o.m, o.rows, o.cols});
    } catch (const FamilyError& e) {
        throw UsageError(e.what());
    }
    auto side = construction_side_file(c);
    write_graph_file(o.out + ".el", c.graph);
    write_file(o.out + ".json", side.dump(2) + "\n");
    Result r;
    r.doc = side;
    r.doc["graph"] = o.out + ".el";
    r.summary = fmt::format("{}: n = {}, claimed size {}", c.name, c.graph.n(),
                            c.claimed_size ? std::to_string(*c.claimed_size) : "none");
    return r;
}

Result do_enumerate(const Options& o) {
    if (o.max_n < 0 || o.max_n > kEnumerationCap)
        throw UsageError(fmt::format("--max-n: {} outside 0..{}", o.max_n, kEnumerationCap));
    auto forms = enumerate_admitting_graphs(o.max_n, o.threads);
    Result r;
    json classes = json::array();
    for (const auto& cf : forms) {
        Graph g = from_canonical_form(cf);
        classes.push_back({{"canonical", cf.hex()}, {"n", g.n()}, {"m", g.num_edges()}, {"edges", g.edges()}});
    }
    r.doc = {{"max_n", o.max_n}, {"count", forms.size()}, {"classes", classes}};
    r.summary = fmt::format("{} isomorphism class(es) on at most {} vertices admit an ERR:IC", forms.size(), o.max_n);
    return r;
}

Result do_density(const Options& o) {
    auto or_default = [](const std::vector<int>& v, int d) { return v.empty() ? std::vector<int>{d} : v; };
    json rows = json::array();
    bool all_match = true;
    std::string summary;
    for (int k : or_default(o.ks, o.k))
        for (int m : or_default(o.ms, o.m))
            for (int nr : or_default(o.rows_list, o.rows))
                for (int nc : or_default(o.cols_list, o.cols)) {
                    CertifiedConstruction c;
                    try {
                        c = make_family(o.family, {k, m, nr, nc});
                    } catch (const FamilyError& e) {
                        throw UsageError(e.what());
                    }
                    std::string method = o.method;
                    if (method == "auto") {
                        bool cubic = c.graph.is_regular(3) && find_twins(c.graph).empty() &&
                                     find_triangles(c.graph).empty();
                        method = cubic ? "cubic" : "bnb";
                    }
                    auto best = solve_with(c.graph, method, {o.threads, o.node_budget});
                    auto claimed = c.claimed_density();
                    std::optional<Rational> solved;
                    if (best) solved = Rational(best->size, c.graph.n());
                    bool match = !claimed || (solved && *claimed == *solved);
                    all_match = all_match && match;
                    rows.push_back({{"name", c.name},
                                    {"n", c.graph.n()},
                                    {"claimed_size", c.claimed_size ? json(*c.claimed_size) : json(nullptr)},
                                    {"claimed_density", claimed ? json(claimed->str()) : json(nullptr)},
                                    {"solver_size", best ? json(best->size) : json(nullptr)},
                                    {"solver_density", solved ? json(solved->str()) : json(nullptr)},
                                    {"method", method},
                                    {"match", match}});
                    summary += fmt::format("{:<24} claimed {:>8}  solver {:>8}{}\n", c.name,
                                           claimed ? claimed->str() : "-", solved ? solved->str() : "NONE",
                                           match ? "" : "  MISMATCH");
                }
    Result r;
    r.doc = {{"family", o.family}, {"rows", rows}, {"all_match", all_match}};
    r.code = all_match ? kExitOk : kExitNegative;
    if (!summary.empty()) summary.pop_back();
    r.summary = summary;
    return r;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& msg) {
    out << json{{"error", msg}, {"exit_code", kExitUsage}}.dump() << "\n";
    err << "error: " << msg << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Error-correcting identifying codes: verify, solve, reduce and generate"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");
    Options o;

    const std::vector<std::string> methods{"oracle", "bnb", "cubic"};
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "solver threads")->check(CLI::Range(1, 256));
        sub->add_option("--node-budget", o.node_budget, "abort after this many search nodes (0 = unlimited)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* verify = app.add_subcommand("verify", "check a detector set against a code kind");
    verify->add_option("--graph", o.graph, "edge-list file")->required();
    verify->add_option("--code", o.code, "comma-separated detector ids")->required();
    verify->add_option("--kind", o.kind, "ic, red, det or err");

    auto* exist = app.add_subcommand("exist", "decide whether an ERR:IC exists");
    exist->add_option("--graph", o.graph, "edge-list file")->required();

    auto* solve = app.add_subcommand("solve", "minimum ERR:IC");
    solve->add_option("--graph", o.graph, "edge-list file")->required();
    solve->add_option("--method", o.method, "oracle, bnb or cubic")->check(CLI::IsMember(methods));
    add_threads(solve);

    auto* reduce = app.add_subcommand("reduce", "3SAT formula to ERR:IC instance");
    reduce->add_option("--cnf", o.cnf, "DIMACS file with 3-literal clauses")->required();
    reduce->add_option("--out", o.out, "output prefix for .el and .json")->required();
    reduce->add_flag("--roundtrip", o.roundtrip, "solve the instance and compare with brute-force SAT");
    add_threads(reduce);

    auto* gen = app.add_subcommand("gen", "write a certified family member");
    gen->add_option("--family", o.family, "g1, g2, g6, g6-straight, g18, g20, ladder or hex")->required();
    gen->add_option("--k", o.k, "copies for ring families");
    gen->add_option("--m", o.m, "ladder length");
    gen->add_option("--rows", o.rows, "hex torus rows");
    gen->add_option("--cols", o.cols, "hex torus columns");
    gen->add_option("--out", o.out, "output prefix for .el and .json")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all graphs on at most N vertices admitting an ERR:IC");
    enumerate->add_option("--max-n", o.max_n, "largest order")->required();
    enumerate->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));

    auto* density = app.add_subcommand("density", "claimed versus solver density for a family");
    density->add_option("--family", o.family, "family name")->required();
    density->add_option("--k", o.ks, "comma-separated copy counts")->delimiter(',');
    density->add_option("--m", o.ms, "comma-separated ladder lengths")->delimiter(',');
    density->add_option("--rows", o.rows_list, "comma-separated hex rows")->delimiter(',');
    density->add_option("--cols", o.cols_list, "comma-separated hex columns")->delimiter(',');
    std::string density_method = "auto";
    density->add_option("--method", density_method, "auto, oracle, bnb or cubic")
        ->check(CLI::IsMember({"auto", "oracle", "bnb", "cubic"}));
    add_threads(density);

    if (!args.empty() && !args[0].starts_with('-') && !app.get_subcommand_no_throw(args[0])) {
        emit_error(out, err,
                   fmt::format("unknown verb '{}' (expected verify, exist, solve, reduce, gen, enumerate or density)",
                               args[0]));
        return kExitUsage;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << json{{"help", app.help()}}.dump() << "\n";
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << json{{"help", app.help("", CLI::AppFormatMode::All)}}.dump() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(out, err, e.what());
        return kExitUsage;
    }

    try {
        Result r;
        if (verify->parsed()) r = do_verify(o);
        else if (exist->parsed()) r = do_exist(o);
        else if (solve->parsed()) r = do_solve(o);
        else if (reduce->parsed()) r = do_reduce(o);
        else if (gen->parsed()) r = do_gen(o);
        else if (enumerate->parsed()) r = do_enumerate(o);
        else {
            o.method = density_method;
            r = do_density(o);
        }
        out << r.doc.dump() << "\n";
        if (!r.summary.empty()) err << r.summary << "\n";
        return r.code;
    } catch (const UsageError& e) {
        emit_error(out, err, e.what());
    } catch (const GraphError& e) {
        emit_error(out, err, e.what());
    } catch (const FormulaError& e) {
        emit_error(out, err, e.what());
    } catch (const std::invalid_argument& e) {
        emit_error(out, err, e.what());
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace errcode::cli
