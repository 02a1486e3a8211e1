#include <benchmark/benchmark.h>

#include <random>

#include "graphcohom/canonical.hpp"
#include "graphcohom/coboundary.hpp"
#include "graphcohom/cohomology.hpp"
#include "graphcohom/enumeration.hpp"
#include "graphcohom/exact_matrix.hpp"

using namespace graphcohom;

namespace {

Execution exec_of(const benchmark::State& st) { return st.range(1) ? Execution::parallel : Execution::serial; }

void BM_enumerate(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_graphs(n, exec_of(st)).size());
}
BENCHMARK(BM_enumerate)->ArgsProduct({{5, 6, 7}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_enumerate_bruteforce(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_graphs_bruteforce(n).size());
}
BENCHMARK(BM_enumerate_bruteforce)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_boundary_matrix(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const SymmetricBasis src = enumerate_graphs(n), dst = enumerate_graphs(n + 1);
    for (auto _ : st) benchmark::DoNotOptimize(boundary_matrix(src, dst, exec_of(st)).nonzeros());
}
BENCHMARK(BM_boundary_matrix)->ArgsProduct({{4, 5, 6}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_boundary_matrix_reference(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const SymmetricBasis src = enumerate_graphs(n), dst = enumerate_graphs(n + 1);
    for (auto _ : st) benchmark::DoNotOptimize(boundary_matrix_reference(src, dst).nonzeros());
}
BENCHMARK(BM_boundary_matrix_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_rank(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const SparseExactMatrix m = boundary_matrix(enumerate_graphs(n), enumerate_graphs(n + 1));
    for (auto _ : st) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_rank)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_rank_bareiss(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const SparseExactMatrix m = boundary_matrix(enumerate_graphs(n), enumerate_graphs(n + 1));
    for (auto _ : st) benchmark::DoNotOptimize(rank_bareiss(m));
}
BENCHMARK(BM_rank_bareiss)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_canonicalize(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::mt19937_64 rng(1);
    std::vector<VectorGraph> gs;
    for (int k = 0; k < 64; ++k) {
        VectorGraph g(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 4) g.set_arrow(v, static_cast<int>(rng() % n));
        gs.push_back(g);
    }
    const bool brute = st.range(1) != 0;
    for (auto _ : st)
        for (const VectorGraph& g : gs)
            benchmark::DoNotOptimize(brute ? canonicalize_bruteforce(g).sign : canonicalize(g).sign);
}
BENCHMARK(BM_canonicalize)->ArgsProduct({{6, 8}, {0, 1}})->ArgNames({"n", "bruteforce"})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
