#include <benchmark/benchmark.h>

#include "errcode/codes.hpp"
#include "errcode/existence.hpp"
#include "errcode/families.hpp"
#include "errcode/reduction.hpp"
#include "errcode/rng.hpp"
#include "errcode/solver.hpp"

using namespace errcode;

namespace {

Graph cubic_code_graph(int n, std::uint64_t seed) {
    for (;; ++seed) {
        Graph g = random_regular(n, 3, seed);
        if (find_twins(g).empty() && find_triangles(g).empty()) return g;
    }
}

Formula random_formula(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    Formula f{n, {}};
    for (int j = 0; j < m; ++j) {
        Clause c;
        int v[3];
        // Variable j % n leads clause j so every variable occurs when m >= n.
        v[0] = j % n + 1;
        do {
            v[1] = rng.range(1, n);
            v[2] = rng.range(1, n);
        } while (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]);
        for (int i = 0; i < 3; ++i) c[i] = {v[i], rng.coin()};
        f.clauses.push_back(c);
    }
    return f;
}

}  // namespace

static void BM_VerifyErrcode(benchmark::State& state) {
    Graph g = cubic_code_graph(static_cast<int>(state.range(0)), 1);
    VertexSet all = complement(g, {});
    for (auto _ : state) benchmark::DoNotOptimize(verify_code(g, all, CodeKind::ERR_IC));
}
BENCHMARK(BM_VerifyErrcode)->Arg(20)->Arg(80)->Arg(320);

static void BM_Oracle(benchmark::State& state) {
    Graph g = cubic_code_graph(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(min_errcode_oracle(g));
}
BENCHMARK(BM_Oracle)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_BranchAndBoundCubic(benchmark::State& state) {
    Graph g = cubic_code_graph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(min_errcode(g));
}
BENCHMARK(BM_BranchAndBoundCubic)->Arg(16)->Arg(24)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ComplementSearch(benchmark::State& state) {
    Graph g = cubic_code_graph(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(max_nondetectors_cubic(g));
}
BENCHMARK(BM_ComplementSearch)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_HexTorusComplement(benchmark::State& state) {
    Graph g = make_hex_torus(static_cast<int>(state.range(0)), 6).graph;
    for (auto _ : state) benchmark::DoNotOptimize(max_nondetectors_cubic(g));
}
BENCHMARK(BM_HexTorusComplement)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ReductionSolve(benchmark::State& state) {
    auto inst = build_reduction(random_formula(4, static_cast<int>(state.range(0)), 5));
    for (auto _ : state) benchmark::DoNotOptimize(min_errcode(inst.graph));
}
BENCHMARK(BM_ReductionSolve)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BuildReduction(benchmark::State& state) {
    auto f = random_formula(static_cast<int>(state.range(0)), static_cast<int>(4 * state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(build_reduction(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildReduction)->RangeMultiplier(4)->Range(8, 2048)->Complexity(benchmark::oN);

static void BM_CanonicalForm(benchmark::State& state) {
    Graph g = random_gnp(static_cast<int>(state.range(0)), 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10, 2);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_admitting_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
