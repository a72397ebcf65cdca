#include <benchmark/benchmark.h>

#include "maxcyl/families.hpp"
#include "maxcyl/identities.hpp"
#include "maxcyl/spectral/bands.hpp"

using namespace maxcyl;

namespace {

const CrossSection kSquare = CrossSection::rectangle(kPi, kPi);

Medium medium(const CrossSection& cs) {
  const CoefficientField c = CoefficientField::create(
      {CoefficientTerm::constant(2.0), CoefficientTerm::trig(0.3, 1.0, 0.5, 1, 0.2)}, 1.0, 3.0, cs);
  return Medium{c, c};
}

void BM_CoefficientJet(benchmark::State& state) {
  const CoefficientField c = medium(kSquare).eps;
  const Vec3 x(0.3, 1.2, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(c.eval(x));
}
BENCHMARK(BM_CoefficientJet);

void BM_PotentialMatrix(benchmark::State& state) {
  const Medium m = medium(kSquare);
  const Vec3 x(0.3, 1.2, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(m.v(x, 1.1));
}
BENCHMARK(BM_PotentialMatrix);

void BM_IdentitySuite(benchmark::State& state) {
  const CrossSection cs = state.range(0) ? CrossSection::disk(1.0) : kSquare;
  const Medium m = medium(cs);
  SuiteOptions opt;
  opt.points = 32;
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(m, opt));
}
BENCHMARK(BM_IdentitySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_YeeAssembly(benchmark::State& state) {
  const int n = int(state.range(0));
  const Medium m = medium(kSquare);
  const StaggeredGrid g(kSquare, n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_curlcurl(g, m.eps, m.mu, 0.5));
}
BENCHMARK(BM_YeeAssembly)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Bands(benchmark::State& state) {
  const int n = int(state.range(0));
  const Medium m = medium(kSquare);
  const StaggeredGrid g(kSquare, n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(maxwell_bands(g, m.eps, m.mu, {0.5}, 6));
}
BENCHMARK(BM_Bands)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
