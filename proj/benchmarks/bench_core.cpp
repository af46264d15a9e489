#include "dricci/comparisons.hpp"
#include "dricci/product.hpp"

#include <benchmark/benchmark.h>

using namespace dricci;

namespace {

void BM_RicciEdge(benchmark::State& state) {
    const GraphContext ctx(gen_complete(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ricci(ctx, 0, 1));
}
BENCHMARK(BM_RicciEdge)->Arg(4)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RicciViaLimit(benchmark::State& state) {
    const GraphContext ctx(gen_complete(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ricci_via_limit(ctx, 0, 1));
}
BENCHMARK(BM_RicciViaLimit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CurvatureAllPairs(benchmark::State& state) {
    const GraphContext ctx(gen_cycle(static_cast<std::size_t>(state.range(0))));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(curvature_report(ctx, Scope::All, threads));
}
BENCHMARK(BM_CurvatureAllPairs)->Args({8, 1})->Args({8, 4})->Args({12, 1})->Unit(benchmark::kMillisecond);

void BM_Wasserstein(benchmark::State& state) {
    const GraphContext ctx(gen_complete(static_cast<std::size_t>(state.range(0))));
    const auto a = lazy_measure(ctx.markov, 0, Rational(1, 3));
    const auto b = lazy_measure(ctx.markov, 2, Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(wasserstein(ctx.dist, a, b));
}
BENCHMARK(BM_Wasserstein)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
    const GraphContext ctx(gen_cycle(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(ctx.markov));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(32)->Arg(64);

void BM_Isoperimetric(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const GraphContext ctx(gen_cycle(n + 2));
    std::vector<Vertex> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_isoperimetric(ctx.markov, subset));
}
BENCHMARK(BM_Isoperimetric)->Arg(8)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_DirichletDescent(benchmark::State& state) {
    const GraphContext ctx(gen_complete(8));
    const std::vector<Vertex> subset{0, 1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_descent(ctx.markov, subset, 1.5));
}
BENCHMARK(BM_DirichletDescent)->Unit(benchmark::kMillisecond);

void BM_ProductChecks(benchmark::State& state) {
    const ProductContext pc(ProductSpec(gen_cycle(3), gen_cycle(4), Rational(2, 3), Rational(5, 7)));
    for (auto _ : state) benchmark::DoNotOptimize(check_product_curvature_all(pc));
}
BENCHMARK(BM_ProductChecks)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
    const auto g = gen_complete(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(full_report(g));
}
BENCHMARK(BM_FullReport)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
