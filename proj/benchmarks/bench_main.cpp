#include <hodge/grading.hpp>
#include <hodge/jacobian.hpp>
#include <hodge/rootsys.hpp>
#include <hodge/verification.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_BuildRootSystem(benchmark::State& state, const char* type) {
    const auto spec = hodge::CartanSpec::named(type);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodge::build_root_system(spec));
    }
}
BENCHMARK_CAPTURE(BM_BuildRootSystem, A8, "A8");
BENCHMARK_CAPTURE(BM_BuildRootSystem, F4, "F4");
BENCHMARK_CAPTURE(BM_BuildRootSystem, E8, "E8");

void BM_GenerationOracle(benchmark::State& state) {
    const auto rs = hodge::build_root_system(hodge::CartanSpec::named("E8"));
    const auto dec = hodge::grade(rs, hodge::GradingElement{{1, 1, 1, 1, 1, 1, 1, 1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodge::generates_oracle(dec));
    }
}
BENCHMARK(BM_GenerationOracle);

void BM_GradingGrid(benchmark::State& state) {
    hodge::GridConfig config;
    config.max_rank = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodge::run_grading_grid(config));
    }
}
BENCHMARK(BM_GradingGrid)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

// Builds every graded piece up to the socle from scratch.
void BM_JacobianPieces(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        hodge::JacobianRing jr(hodge::HypersurfaceSpec::fermat(n, d));
        std::size_t total = 0;
        for (int m = 0; m <= jr.socle(); ++m) total += jr.dim(m);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_JacobianPieces)->Args({2, 4})->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_ExplicitPieces(benchmark::State& state) {
    std::vector<hodge::Term> terms;
    for (int i = 0; i < 4; ++i) {
        hodge::Exponent e(4, 0);
        e[i] = 4;
        terms.push_back({e, 1});
    }
    terms.push_back({{1, 1, 1, 1}, hodge::Rational(-1, 2)});
    for (auto _ : state) {
        hodge::JacobianRing jr(hodge::HypersurfaceSpec::explicit_form(2, 4, terms));
        benchmark::DoNotOptimize(jr.dim(jr.socle() + 1));
    }
}
BENCHMARK(BM_ExplicitPieces)->Unit(benchmark::kMillisecond);

void BM_MacaulayCheck(benchmark::State& state) {
    for (auto _ : state) {
        hodge::JacobianRing jr(hodge::HypersurfaceSpec::fermat(3, 5));
        benchmark::DoNotOptimize(hodge::macaulay_check(jr));
    }
}
BENCHMARK(BM_MacaulayCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
