#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "trigsynth/gadgets.hpp"
#include "trigsynth/grid.hpp"
#include "trigsynth/kernels.hpp"
#include "trigsynth/sup_norm.hpp"
#include "trigsynth/synthesizer.hpp"

using namespace trigsynth;

namespace {

void bm_fft_forward(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<cplx> data(n);
  for (std::size_t j = 0; j < n; ++j)
    data[j] = cplx(std::sin(0.37 * static_cast<double>(j)),
                   std::cos(0.11 * static_cast<double>(j)));
  for (auto _ : state) {
    std::vector<cplx> work = data;
    fft::forward_inplace(work);
    benchmark::DoNotOptimize(work.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_fft_forward)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity();

void bm_dirichlet_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_eval(n, t));
    t += 1e-4;
  }
}
BENCHMARK(bm_dirichlet_eval)->Arg(10)->Arg(1000)->Arg(100000);

void bm_lebesgue_constant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lebesgue_constant(n));
}
BENCHMARK(bm_lebesgue_constant)->Arg(10)->Arg(100)->Arg(1000);

void bm_certified_sup_norm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1));
  for (int k = -d; k <= d; ++k)
    coeffs[static_cast<std::size_t>(k + d)] =
        cplx(1.0 / (1.0 + std::abs(k)), 0.5 / (1.0 + std::abs(k)));
  const TrigPoly p = TrigPoly::from_coeffs(d, std::move(coeffs));
  for (auto _ : state)
    benchmark::DoNotOptimize(certified_sup_norm(p).upper);
}
BENCHMARK(bm_certified_sup_norm)->Arg(32)->Arg(512)->Arg(4096);

void bm_correlation_profile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const TrigPoly profile = correlation_profile(n);
    benchmark::DoNotOptimize(profile.degree());
  }
}
BENCHMARK(bm_correlation_profile)->Arg(8)->Arg(64)->Arg(512);

void bm_bump(benchmark::State& state) {
  BumpSpec spec;
  spec.ones_region = {Arc(CirclePoint(1.0), 1.0)};
  spec.zeros_region = {Arc(CirclePoint(4.0), 1.0)};
  spec.flatness = 1e-3;
  for (auto _ : state) {
    const BumpResult r = bump(spec);
    benchmark::DoNotOptimize(r.phi.degree());
  }
}
BENCHMARK(bm_bump);

void bm_multi_point_target(benchmark::State& state) {
  TargetSpec target;
  target.points = {CirclePoint(0.0), CirclePoint(two_pi / 3.0),
                   CirclePoint(2.0 * two_pi / 3.0)};
  target.values = {cplx(0.4, 0.0), cplx(-0.35, 0.1), cplx(0.0, 0.45)};
  const IndexSetSpec lambda = IndexSetSpec::all(0, 100000);
  for (auto _ : state) {
    const SynthesisResult r =
        multi_point_target(TrigPoly::zero(), target, 1.0, lambda);
    benchmark::DoNotOptimize(r.n);
  }
}
BENCHMARK(bm_multi_point_target);

}  // namespace

BENCHMARK_MAIN();
