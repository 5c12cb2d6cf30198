// Micro-benchmarks for the 4x4 covariance pipeline: spectral extraction,
// composition, energetics, classification, and the grid threshold search.

#include <benchmark/benchmark.h>

#include <numbers>

#include "cvergo/bloch_messiah.hpp"
#include "cvergo/covariance.hpp"
#include "cvergo/energetics.hpp"
#include "cvergo/states.hpp"
#include "cvergo/witnesses.hpp"

namespace {

cvergo::BlochMessiahParams mixed_params() {
  cvergo::BlochMessiahParams p;
  p.k = 2.5;
  p.gamma = 0.5;
  p.z_a = 0.3;
  p.z_b = 2.1;
  p.theta = 0.6;
  p.phi_a = 1.1;
  p.phi_b = 4.2;
  return p;
}

void BM_SymplecticEigenvalues(benchmark::State& state) {
  const auto sigma = cvergo::compose_bloch_messiah(mixed_params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::symplectic_eigenvalues(sigma));
  }
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_StandardForm(benchmark::State& state) {
  const auto sigma = cvergo::compose_bloch_messiah(mixed_params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::standard_form(sigma));
  }
}
BENCHMARK(BM_StandardForm);

void BM_ComposeBlochMessiah(benchmark::State& state) {
  const auto p = mixed_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::compose_bloch_messiah(p));
  }
}
BENCHMARK(BM_ComposeBlochMessiah);

void BM_ErgotropyReport(benchmark::State& state) {
  const auto sigma = cvergo::compose_bloch_messiah(mixed_params());
  const cvergo::ModePair modes(1.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::ergotropy_report(sigma, modes));
  }
}
BENCHMARK(BM_ErgotropyReport);

void BM_RegClosedForm(benchmark::State& state) {
  const auto p = mixed_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::reg_closed_form(p, 4.0));
  }
}
BENCHMARK(BM_RegClosedForm);

void BM_Classify(benchmark::State& state) {
  const auto sigma = cvergo::compose_bloch_messiah(mixed_params());
  const cvergo::ModePair modes(1.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::classify(sigma, modes));
  }
}
BENCHMARK(BM_Classify);

void BM_PhotonSubtractedState(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::photon_subtracted_tms(1.4, 0.45));
  }
}
BENCHMARK(BM_PhotonSubtractedState);

void BM_RandomState(benchmark::State& state) {
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::random_state_at(
        2.5, 0.5, cvergo::SamplerRanges{}, 7, index++));
  }
}
BENCHMARK(BM_RandomState);

void BM_ThresholdSearch(benchmark::State& state) {
  cvergo::GridSpec grid;
  grid.n_k = static_cast<int>(state.range(0));
  grid.n_z = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvergo::reg_threshold_search(grid));
  }
}
BENCHMARK(BM_ThresholdSearch)->Arg(50)->Arg(200);

} // namespace

BENCHMARK_MAIN();
