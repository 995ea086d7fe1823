#include "kernelcurve/classify.hpp"
#include "kernelcurve/involutions.hpp"
#include "kernelcurve/kernel.hpp"
#include "kernelcurve/quartic.hpp"
#include "kernelcurve/series.hpp"
#include "kernelcurve/uniform_g0.hpp"
#include "kernelcurve/uniform_g1.hpp"

#include <benchmark/benchmark.h>

namespace {

kc::WalkModel simple_walk() {
  return kc::parse_model(R"({"weights": [[0, "1/4", 0], ["1/4", 0, "1/4"], [0, "1/4", 0]], "t": "1/4"})");
}

kc::WalkModel gessel() {
  return kc::parse_model(R"({"weights": [[0, 0, "1/4"], ["1/4", 0, "1/4"], ["1/4", 0, 0]], "t": "1/4"})");
}

void BM_QuarticRoots(benchmark::State& state) {
  const kc::QuarticForm<double> d = kc::discriminant(gessel(), kc::Axis::X);
  for (auto _ : state) benchmark::DoNotOptimize(kc::quartic_roots(d));
}
BENCHMARK(BM_QuarticRoots);

void BM_KernelCurve(benchmark::State& state) {
  const kc::WalkModel m = gessel();
  for (auto _ : state) {
    const kc::KernelCurve c(m);
    benchmark::DoNotOptimize(c.branches());
  }
}
BENCHMARK(BM_KernelCurve);

void BM_Weierstrass(benchmark::State& state) {
  const kc::Lattice l(kc::Complex(0.0, 3.19), 11.2);
  kc::Complex w(1.3, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kc::weierstrass(l, w));
    w += 1e-9;
  }
}
BENCHMARK(BM_Weierstrass);

void BM_UniformizeGenus1(benchmark::State& state) {
  const kc::KernelCurve c(gessel());
  for (auto _ : state) benchmark::DoNotOptimize(kc::uniformize_genus1(c));
}
BENCHMARK(BM_UniformizeGenus1);

void BM_LambdaMap(benchmark::State& state) {
  const kc::GenusOneUniformization u = kc::uniformize_genus1(gessel());
  const kc::Complex w = 0.3 * u.omega2 + 0.6 * u.omega1;
  for (auto _ : state) benchmark::DoNotOptimize(kc::lambda_map(u, w));
}
BENCHMARK(BM_LambdaMap);

void BM_Sigma(benchmark::State& state) {
  const kc::KernelCurve c(gessel());
  kc::CurvePoint p = kc::points_over_x(c, kc::ProjPoint::affine({0.3, 0.2})).first;
  for (auto _ : state) {
    p = kc::sigma(c, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Sigma);

void BM_WalkSeries(benchmark::State& state) {
  const kc::WalkModel m = simple_walk();
  for (auto _ : state) benchmark::DoNotOptimize(kc::walk_series(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WalkSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_VerifyFunctionalEquation(benchmark::State& state) {
  const kc::WalkModel m = gessel();
  for (auto _ : state) benchmark::DoNotOptimize(kc::verify_functional_equation(m, 12));
}
BENCHMARK(BM_VerifyFunctionalEquation);

}  // namespace

BENCHMARK_MAIN();
