#include <benchmark/benchmark.h>

#include <tdd/discord.hpp>
#include <tdd/linalg.hpp>
#include <tdd/oracle.hpp>
#include <tdd/spin_chain.hpp>
#include <tdd/state.hpp>

#include <cmath>
#include <complex>

namespace {

using tdd::Complex;
using tdd::ComplexMatrix4;
using tdd::Vec3;

// A fixed full-rank state with no special structure: exercises the
// classification fall-through and the numeric minimizer.
tdd::DensityMatrix general_state() {
  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(0, 0) = 0.4;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  m(3, 3) = 0.1;
  m(0, 1) = Complex(0.05, 0.02);
  m(1, 0) = std::conj(m(0, 1));
  m(2, 3) = Complex(0.03, -0.01);
  m(3, 2) = std::conj(m(2, 3));
  m(0, 2) = Complex(0.01, 0.04);
  m(2, 0) = std::conj(m(0, 2));
  return tdd::validate(m);
}

tdd::DensityMatrix qc_state() {
  return tdd::make_quantum_classical(0.3, Vec3(0, 0, 0.9),
                                     Vec3(std::sin(1.1) * 0.6, 0.0,
                                          std::cos(1.1) * 0.6));
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  const ComplexMatrix4 m = general_state().matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::hermitian_eigenvalues(m));
  }
}
BENCHMARK(BM_HermitianEigenvalues);

void BM_TraceNorm(benchmark::State& state) {
  const tdd::DensityMatrix rho = general_state();
  const ComplexMatrix4 remainder =
      4.0 * (rho.matrix() -
             tdd::oracle::apply_measurement_channel(rho.matrix(),
                                                    Vec3(0, 0, 1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::trace_norm(remainder));
  }
}
BENCHMARK(BM_TraceNorm);

void BM_SignedSvdSo3(benchmark::State& state) {
  const tdd::RealMatrix3 gamma = tdd::to_bloch(general_state()).gamma;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::signed_svd_so3(gamma));
  }
}
BENCHMARK(BM_SignedSvdSo3);

void BM_BuildFrame(benchmark::State& state) {
  const tdd::BlochForm b = tdd::to_bloch(general_state());
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::build_frame(b));
  }
}
BENCHMARK(BM_BuildFrame);

void BM_ObjectiveH(benchmark::State& state) {
  const tdd::CorrelationFrame f = tdd::build_frame(tdd::to_bloch(general_state()));
  const tdd::Direction d(1.1, 2.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::objective_h(f, d));
  }
}
BENCHMARK(BM_ObjectiveH);

void BM_DiscordNumeric(benchmark::State& state) {
  const tdd::BlochForm b = tdd::to_bloch(general_state());
  tdd::MinimizerConfig cfg;
  cfg.grid_theta = static_cast<int>(state.range(0));
  cfg.grid_phi = 2 * cfg.grid_theta;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::discord_numeric(b, cfg));
  }
  state.SetLabel(std::to_string(cfg.grid_theta) + "x" +
                 std::to_string(cfg.grid_phi));
}
BENCHMARK(BM_DiscordNumeric)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const tdd::BlochForm b = tdd::to_bloch(
      tdd::make_x_state(0.4, 0.3, 0.2, 0.1, Complex(0.1, 0.05),
                        Complex(0.02, -0.03)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::classify(b));
  }
}
BENCHMARK(BM_Classify);

void BM_DiscordXStateClosed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::discord_x_state(0.8, 0.5, 0.3, 0.2));
  }
}
BENCHMARK(BM_DiscordXStateClosed);

void BM_DispatcherClosedRoute(benchmark::State& state) {
  const tdd::DensityMatrix rho = qc_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::discord(rho));
  }
}
BENCHMARK(BM_DispatcherClosedRoute)->Unit(benchmark::kMicrosecond);

void BM_OracleChannel(benchmark::State& state) {
  const tdd::DensityMatrix rho = general_state();
  const tdd::Direction d(1.1, 2.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::oracle::apply_measurement_channel(rho, d));
  }
}
BENCHMARK(BM_OracleChannel);

void BM_OracleDefinition(benchmark::State& state) {
  const tdd::DensityMatrix rho = qc_state();
  tdd::oracle::OracleConfig cfg;
  cfg.points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::oracle::discord_definition(rho, cfg));
  }
}
BENCHMARK(BM_OracleDefinition)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_ChainAmplitude(benchmark::State& state) {
  tdd::spinchain::ChainConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::spinchain::transition_amplitude(cfg, 2.3));
  }
}
BENCHMARK(BM_ChainAmplitude)->Arg(3)->Arg(8);

void BM_ChainSampleRow(benchmark::State& state) {
  tdd::spinchain::ChainConfig cfg;
  cfg.times = {2.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdd::spinchain::run_series(cfg));
  }
}
BENCHMARK(BM_ChainSampleRow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
