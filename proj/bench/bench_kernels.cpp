#include <benchmark/benchmark.h>

#include "eqloc/equivariant_index.hpp"
#include "eqloc/presets.hpp"
#include "eqloc/spectral_model.hpp"

using namespace eqloc;

namespace {

const DelzantPolytope& big_simplex() {
  static const DelzantPolytope p =
      build_polytope(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{-1, -1, -1}, -40}});
  return p;
}

const ToricCase& big_hirzebruch() {
  static const ToricCase tc = preset_hirzebruch(3, 30, 120);
  return tc;
}

spectral::CylinderModel cylinder() {
  spectral::CylinderModel c;
  c.center = 2;
  c.m = 1;
  c.n_lo = -3;
  c.n_hi = 7;
  return c;
}

void BM_LatticePoints(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(lattice_points(big_simplex()));
}
void BM_LatticePointsSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(lattice_points_serial(big_simplex()));
}

void BM_FixedPoint(benchmark::State& s) {
  const auto& tc = big_hirzebruch();
  for (auto _ : s) benchmark::DoNotOptimize(atiyah_bott_character(tc.polytope, tc.circle.xi));
}
void BM_FixedPointSerial(benchmark::State& s) {
  const auto& tc = big_hirzebruch();
  for (auto _ : s)
    benchmark::DoNotOptimize(atiyah_bott_character_serial(tc.polytope, tc.circle.xi));
}

void BM_SpectralModes(benchmark::State& s) {
  const auto c = cylinder();
  for (auto _ : s) benchmark::DoNotOptimize(spectral::spectral_local_index(c));
}
void BM_SpectralModesSerial(benchmark::State& s) {
  const auto c = cylinder();
  for (auto _ : s) benchmark::DoNotOptimize(spectral::spectral_local_index_serial(c));
}

}  // namespace

BENCHMARK(BM_LatticePoints)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticePointsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPoint)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPointSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralModes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralModesSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
