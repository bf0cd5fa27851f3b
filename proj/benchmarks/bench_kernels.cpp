// Microbenchmarks of the hot kernels: one simulation step, the binomial
// sampler in both regimes, immigration draws, the closed-form window CF, and
// the numeric Levy exponent integral it is cross-checked against.

#include <benchmark/benchmark.h>

#include <vector>

#include "agglab/analytic.hpp"
#include "agglab/binomial.hpp"
#include "agglab/pareto_int.hpp"
#include "agglab/quadrature.hpp"
#include "agglab/rng.hpp"
#include "agglab/sim.hpp"
#include "agglab/stats.hpp"

namespace {

using namespace agglab;

void BM_Step(benchmark::State& state) {
    const ModelParams params{0.5, 1.5};  // m_xi, alpha
    Xoshiro256pp rng = Xoshiro256pp::for_stream(42, 0);
    double x = 10.0;
    for (auto _ : state) {
        x = step(x, params, rng);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Step);

void BM_BinomialSmallMean(benchmark::State& state) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(42, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(binomial_draw(20.0, 0.5, rng));
    }
}
BENCHMARK(BM_BinomialSmallMean);

void BM_BinomialLargeMean(benchmark::State& state) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(42, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(binomial_draw(1e6, 0.5, rng));
    }
}
BENCHMARK(BM_BinomialLargeMean);

void BM_ImmigrationDraw(benchmark::State& state) {
    const ParetoIntLaw law{0.5};
    Xoshiro256pp rng = Xoshiro256pp::for_stream(42, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(imm_sample(law, rng.u01()));
    }
}
BENCHMARK(BM_ImmigrationDraw);

void BM_WindowCF(benchmark::State& state) {
    const ModelParams params{0.5, 1.5};  // m_xi, alpha
    const std::vector<double> theta{0.7, -1.1, 0.4, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_mu(theta, 3, params));
    }
}
BENCHMARK(BM_WindowCF);

void BM_LevyExponentIntegral(benchmark::State& state) {
    const QuadratureConfig quad;
    for (auto _ : state) {
        benchmark::DoNotOptimize(levy_exponent_integral(1.3, 0.7, quad));
    }
}
BENCHMARK(BM_LevyExponentIntegral);

void BM_Ecf(benchmark::State& state) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(42, 4);
    std::vector<double> sample(10000);
    for (auto& v : sample) v = rng.u01();
    const std::vector<double> theta{1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf(sample.data(), sample.size(), 1, theta));
    }
}
BENCHMARK(BM_Ecf);

}  // namespace

BENCHMARK_MAIN();
