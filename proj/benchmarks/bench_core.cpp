#include <benchmark/benchmark.h>

#include "ssm/ascent.hpp"
#include "ssm/gessel.hpp"
#include "ssm/sampler.hpp"
#include "ssm/schurq.hpp"
#include "ssm/tracywidom.hpp"

namespace {

void BM_LWord(benchmark::State& state) {
    ssm::MeasureParams sigma(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                             0.4);
    auto w = ssm::to_biword(ssm::sample_matrix(sigma, {42, 0})).bottoms();
    for (auto _ : state) benchmark::DoNotOptimize(ssm::L_word(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LWord)->Arg(25)->Arg(50)->Arg(100)->Complexity();

void BM_SampleLambda1(benchmark::State& state) {
    ssm::MeasureParams sigma(50, 50, 0.4);
    std::uint64_t r = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(ssm::lambda1(ssm::sample_matrix(sigma, {42, r++})));
}
BENCHMARK(BM_SampleLambda1);

void BM_QCoeffsXScalar(benchmark::State& state) {
    auto spec = ssm::Specialization::alpha_spec(80, ssm::Rational(2, 5));
    for (auto _ : state)
        benchmark::DoNotOptimize(ssm::q_coeffs<ssm::XScalar>(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QCoeffsXScalar)->Arg(256)->Arg(512);

void BM_CdfExactXFloat(benchmark::State& state) {
    ssm::MeasureParams sigma(40, 40, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(ssm::cdf_exact(sigma, 80, ssm::ScalarMode::XFloat));
}
BENCHMARK(BM_CdfExactXFloat);

void BM_F2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ssm::f2(-2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_F2)->Arg(40)->Arg(64)->Arg(80);

void BM_PoissonL(benchmark::State& state) {
    std::uint64_t r = 0;
    for (auto _ : state) benchmark::DoNotOptimize(ssm::poisson_L(10.0, {42, r++}));
}
BENCHMARK(BM_PoissonL);

}  // namespace

BENCHMARK_MAIN();
