// Regenerates data/fixtures. Each searched object is certified by the solver
// before it is written.
//
//   fixture_search --out data/fixtures [--seed 0] [--only g6|g18|g20|ladder|hex]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "errcode/families.hpp"
#include "errcode/graph.hpp"

namespace fs = std::filesystem;
using namespace errcode;

namespace {

void write_text(const fs::path& p, const std::string& body) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", p.string()));
    out << body;
    fmt::print(stderr, "wrote {}\n", p.string());
}

void write_json(const fs::path& p, const nlohmann::json& j) { write_text(p, j.dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regenerate searched fixtures"};
    std::string out_dir = "data/fixtures";
    std::uint64_t seed = 0;
    std::string only;
    app.add_option("--out", out_dir, "fixture directory");
    app.add_option("--seed", seed, "search seed for the randomized searches");
    app.add_option("--only", only, "regenerate a single fixture")
        ->check(CLI::IsMember({"g6", "g18", "g20", "ladder", "hex"}));
    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(out_dir);
        const fs::path dir(out_dir);
        auto want = [&](const char* name) { return only.empty() || only == name; };

        if (want("g6")) {
            auto b = search::g6_block();
            write_text(dir / "g6_block.el", format_graph(Graph(6, b.edges)));
            write_json(dir / "g6_block.json", {{"left", {b.left1, b.left2}},
                                               {"right", {b.right1, b.right2}},
                                               {"designated", b.designated},
                                               {"regenerate", "fixture_search --only g6"}});
        }
        if (want("g18")) {
            auto b = search::g18_block(seed);
            nlohmann::json labels;
            const std::string names = "abcdefghijklmnpqrs";
            for (std::size_t i = 0; i < names.size(); ++i) labels[std::string(1, names[i])] = i;
            write_text(dir / "g18_block.el", format_graph(Graph(18, b.edges)));
            write_json(dir / "g18_block.json", {{"labels", labels},
                                                {"connectors", {{"i", labels["i"]}, {"j", labels["j"]}}},
                                                {"red", {labels["d"], labels["i"], labels["p"]}},
                                                {"blue", {labels["e"], labels["j"], labels["n"]}},
                                                {"recipe_vertex", b.b},
                                                {"seed", seed},
                                                {"regenerate", fmt::format("fixture_search --only g18 --seed {}", seed)}});
        }
        if (want("g20")) {
            auto c = find_g20(seed);
            write_text(dir / "g20.el", format_graph(c.graph));
            write_json(dir / "g20.json", {{"code", *c.code},
                                          {"claimed_size", *c.claimed_size},
                                          {"seed", seed},
                                          {"regenerate", fmt::format("fixture_search --only g20 --seed {}", seed)}});
        }
        if (want("ladder")) {
            auto [a, b] = search::ladder_pattern();
            write_json(dir / "ladder_pattern.json", {{"period", 8},
                                                     {"nondetectors", {{0, a}, {1, b}}},
                                                     {"regenerate", "fixture_search --only ladder"}});
        }
        if (want("hex")) {
            auto [a, b] = search::hex_pattern();
            write_json(dir / "hex_pattern.json", {{"period", 6},
                                                  {"nondetectors", {{0, a}, {1, b}}},
                                                  {"smallest", {{"rows", 4}, {"cols", 6}}},
                                                  {"regenerate", "fixture_search --only hex"}});
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "fixture_search: {}\n", e.what());
        return 1;
    }
    return 0;
}
