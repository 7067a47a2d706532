#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "errcode/families.hpp"
#include "errcode/reduction.hpp"
#include "errcode/report_json.hpp"
#include "errcode/rng.hpp"
#include "support/formulas.hpp"

using namespace errcode;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    nlohmann::json doc;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    std::string text = out.str();
    // Exactly one JSON document followed by a newline.
    REQUIRE_FALSE(text.empty());
    CHECK(text.back() == '\n');
    CHECK(text.find('\n') == text.size() - 1);
    return {code, nlohmann::json::parse(text), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("errcode_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& body) { std::ofstream(path) << body; }

}  // namespace

TEST_CASE("documented invocations") {
    TempDir dir;
    write(dir.file("g1.el"), format_graph(make_small_graph(SmallGraph::G1).graph));
    write(dir.file("c7.el"), "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");

    auto solve = run({"solve", "--graph", dir.file("g1.el")});
    CHECK(solve.code == 0);
    CHECK(solve.doc["size"] == 7);

    auto verify = run({"verify", "--graph", dir.file("c7.el"), "--code", "0,1,2,3,4,5,6", "--kind", "err"});
    CHECK(verify.code == 1);
    CHECK(verify.doc["valid"] == false);

    auto en = run({"enumerate", "--max-n", "7"});
    CHECK(en.code == 0);
    CHECK(en.doc["count"] == 2);
    CHECK(en.doc["classes"].size() == 2);
}

TEST_CASE("every verb") {
    TempDir dir;
    write(dir.file("g1.el"), format_graph(make_small_graph(SmallGraph::G1).graph));
    write(dir.file("c7.el"), "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");

    CHECK(run({"exist", "--graph", dir.file("g1.el")}).code == 0);
    auto c7 = run({"exist", "--graph", dir.file("c7.el")});
    CHECK(c7.code == 1);
    CHECK(c7.doc["failed_properties"][0] == "iii:adjacent-degree-2");

    auto none = run({"solve", "--graph", dir.file("c7.el"), "--method", "oracle"});
    CHECK(none.code == 1);
    CHECK(none.doc["exists"] == false);

    auto gen = run({"gen", "--family", "g6", "--k", "3", "--out", dir.file("g6")});
    CHECK(gen.code == 0);
    CHECK(gen.doc["claimed_size"] == 15);
    CHECK(fs::exists(dir.file("g6.el")));
    CHECK(fs::exists(dir.file("g6.json")));
    auto cubic = run({"solve", "--graph", dir.file("g6.el"), "--method", "cubic"});
    CHECK(cubic.doc["size"] == 15);
    auto threaded = run({"solve", "--graph", dir.file("g6.el"), "--threads", "3"});
    CHECK(threaded.doc["detectors"] == cubic.doc["detectors"]);

    auto dens = run({"density", "--family", "ladder", "--m", "8,16"});
    CHECK(dens.code == 0);
    CHECK(dens.doc["rows"].size() == 2);
    CHECK(dens.doc["rows"][1]["solver_density"] == "7/8");
    CHECK(dens.err.find("ladder(m=16)") != std::string::npos);
}

TEST_CASE("reduce round trip matches the library") {
    TempDir dir;
    Rng rng(97);
    for (int t = 0; t < 4; ++t) {
        auto f = formulas::random_formula(3, rng.range(1, 3), rng);
        write(dir.file("f.cnf"), format_dimacs(f));
        auto r = run({"reduce", "--cnf", dir.file("f.cnf"), "--out", dir.file("inst"), "--roundtrip"});
        CHECK(r.code == 0);
        CHECK(r.doc["roundtrip"] == to_json(roundtrip_check(f)));
        CHECK(read_graph_file(dir.file("inst.el")) == build_reduction(f).graph);
    }
}

TEST_CASE("usage and input errors exit 2 and name the problem") {
    TempDir dir;
    write(dir.file("g1.el"), format_graph(make_small_graph(SmallGraph::G1).graph));
    write(dir.file("bad.el"), "3 1\n0 3\n");
    write(dir.file("bad.cnf"), "p cnf 3 1\n1 1 2 0\n");

    auto expect = [](std::vector<std::string> args, const std::string& needle) {
        auto r = run(std::move(args));
        CHECK(r.code == 2);
        CHECK(r.doc.contains("error"));
        CHECK(r.doc["error"].get<std::string>().find(needle) != std::string::npos);
    };
    expect({}, "subcommand");
    expect({"frobnicate"}, "frobnicate");
    expect({"solve"}, "--graph");
    expect({"solve", "--graph", dir.file("g1.el"), "--bogus"}, "--bogus");
    expect({"solve", "--graph", dir.file("g1.el"), "--method", "magic"}, "magic");
    expect({"solve", "--graph", dir.file("bad.el")}, "line 2");
    expect({"solve", "--graph", dir.file("missing.el")}, "cannot open");
    expect({"verify", "--graph", dir.file("g1.el"), "--code", "0,x"}, "--code");
    expect({"verify", "--graph", dir.file("g1.el"), "--code", "0,99"}, "out of range");
    expect({"verify", "--graph", dir.file("g1.el"), "--code", "0,0"}, "repeated");
    expect({"verify", "--graph", dir.file("g1.el"), "--code", "0", "--kind", "zzz"}, "--kind");
    expect({"solve", "--graph", dir.file("g1.el"), "--method", "cubic"}, "--method cubic");
    expect({"reduce", "--cnf", dir.file("bad.cnf"), "--out", dir.file("x")}, "repeated variable");
    expect({"gen", "--family", "square", "--out", dir.file("x")}, "unknown family");
    expect({"gen", "--family", "g6", "--k", "1", "--out", dir.file("x")}, "k >= 2");
    expect({"enumerate", "--max-n", "9"}, "--max-n");
    expect({"solve", "--graph", dir.file("g1.el"), "--threads", "0"}, "--threads");
}

TEST_CASE("fuzzed invocations keep the exit-code contract") {
    TempDir dir;
    write(dir.file("g1.el"), format_graph(make_small_graph(SmallGraph::G1).graph));
    write(dir.file("p.el"), "4 3\n0 1\n1 2\n2 3\n");
    const std::vector<std::string> pool{"verify", "exist",    "solve", "gen",     "--graph",  dir.file("g1.el"),
                                        dir.file("p.el"), "--code", "0,1,2", "--kind", "err",      "det",
                                        "--method", "bnb",     "oracle", "--family", "g1",      "--out",
                                        dir.file("o"),    "--k",      "-3",    "7",       "--threads", "x"};
    Rng rng(101);
    for (int t = 0; t < 400; ++t) {
        std::vector<std::string> args;
        const int len = rng.range(0, 7);
        for (int i = 0; i < len; ++i) args.push_back(pool[rng.below(pool.size())]);
        auto r = run(args);
        CHECK((r.code == 0 || r.code == 1 || r.code == 2));
        if (r.code == 2) CHECK(r.doc.contains("error"));
        else CHECK_FALSE(r.doc.contains("error"));
    }
}
