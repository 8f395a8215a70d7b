#include <benchmark/benchmark.h>

#include <catspec/cfrac.hpp>
#include <catspec/recover.hpp>
#include <catspec/spectral_polynomials.hpp>
#include <catspec/spectrum.hpp>
#include <catspec/tree.hpp>

namespace {

using namespace catspec;

// One deterministic shape per size so runs are comparable across builds.
CaterpillarShape shape_for(int p) { return random_shape(p, 0x5eedu + p); }

void BM_BuildPencil(benchmark::State& state) {
    Tree t = shape_to_tree(shape_for(int(state.range(0))));
    for (auto _ : state) {
        auto pp = build_pencil(t);
        benchmark::DoNotOptimize(pp);
    }
}
BENCHMARK(BM_BuildPencil)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CfBuild(benchmark::State& state) {
    CaterpillarShape shape = shape_for(int(state.range(0)));
    for (auto _ : state) {
        auto ratio = cf_build(shape);
        benchmark::DoNotOptimize(ratio);
    }
}
BENCHMARK(BM_CfBuild)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CfExpandExact(benchmark::State& state) {
    auto ratio = cf_build(shape_for(int(state.range(0))));
    for (auto _ : state) {
        auto out = cf_expand_exact(ratio);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_CfExpandExact)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CfExpandRounded(benchmark::State& state) {
    auto exact = cf_build(shape_for(int(state.range(0))));
    RealRationalFunction ratio;
    for (const auto& c : exact.num().coeffs()) ratio.num.push_back(to_double(c));
    for (const auto& c : exact.den().coeffs()) ratio.den.push_back(to_double(c));
    for (auto _ : state) {
        auto out = cf_expand_rounded(ratio, 1e-9);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_CfExpandRounded)->Arg(8)->Arg(12);

void BM_NeumannSpectrum(benchmark::State& state) {
    Tree t = shape_to_tree(shape_for(int(state.range(0))));
    for (auto _ : state) {
        auto s = neumann_spectrum(t, 1.0, 50);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_NeumannSpectrum)->Arg(4)->Arg(8)->Arg(12);

void BM_FoldAndCluster(benchmark::State& state) {
    Tree t = shape_to_tree(shape_for(int(state.range(0))));
    auto s = neumann_spectrum(t, 1.0, 50);
    for (auto _ : state) {
        auto cs = fold_and_cluster(s, 1.0, 50, 0.05);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_FoldAndCluster)->Arg(4)->Arg(8)->Arg(12);

void BM_RecoverNoiseless(benchmark::State& state) {
    Tree t = shape_to_tree(shape_for(int(state.range(0))));
    auto neu = neumann_spectrum(t, 1.0, 50);
    auto dir = dirichlet_spectrum(t, 1.0, 50);
    for (auto _ : state) {
        auto rep = recover(neu, dir, 1.0);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_RecoverNoiseless)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
