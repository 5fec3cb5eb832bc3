#include <benchmark/benchmark.h>

#include "lagasym/asymptotics.hpp"
#include "lagasym/fredholm.hpp"
#include "lagasym/kernels.hpp"
#include "lagasym/mrs.hpp"
#include "lagasym/oracle.hpp"
#include "lagasym/specfun.hpp"

using namespace lagasym;

namespace {

const WeightSpec quartic(0.5, {0.0, 0.0, 1.0, 0.0, 1.0});

void BM_Airy(benchmark::State& st) {
  const cplx z(st.range(0) / 2.0, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(airy(z));
}
BENCHMARK(BM_Airy)->Arg(2)->Arg(30);  // series and asymptotic branches

void BM_BesselJ(benchmark::State& st) {
  const cplx z(st.range(0), 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(bessel_j(0.7, z));
}
BENCHMARK(BM_BesselJ)->Arg(3)->Arg(40);

void BM_Mrs(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mrs_beta(quartic, st.range(0)));
}
BENCHMARK(BM_Mrs)->Arg(10)->Arg(10000);

void BM_PnAsym(benchmark::State& st) {
  const long n = 80;
  const auto eq = build_equilibrium(quartic, n);
  const double z = st.range(0) / 1000.0;
  const auto tag = classify_region(z);
  for (auto _ : st) benchmark::DoNotOptimize(pn_asym(quartic, eq, n, z, tag));
}
BENCHMARK(BM_PnAsym)->Arg(5)->Arg(500)->Arg(1020)->Arg(2000);

void BM_OracleBuild(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_table(quartic, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_OracleBuild)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_CdKernel(benchmark::State& st) {
  const auto t = build_table(quartic, 80);
  for (auto _ : st) benchmark::DoNotOptimize(cd_kernel(t, 80, 1.3, 1.7));
}
BENCHMARK(BM_CdKernel)->Unit(benchmark::kMicrosecond);

void BM_Fredholm(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fredholm_det_bessel(1.0, 9.0, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_Fredholm)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_Painleve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(painleve_F(1.0, 16.0));
}
BENCHMARK(BM_Painleve)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
