#pragma once

#include <complex>
#include <vector>

#include "tdd/discord.hpp"
#include "tdd/state.hpp"

namespace tdd::spinchain {

// An XX chain of n sites with uniform coupling j > 0 (times are in units of
// 1/j), sampled at the given, monotonically non-decreasing, non-negative
// times.  The minimizer config feeds the numeric cross-check column of
// run_series.
struct ChainConfig {
  int n = 3;
  double j = 1.0;
  std::vector<double> times;
  MinimizerConfig minimizer{};
};

// Throws InvalidConfigError unless n >= 2, j > 0 and the times are finite,
// non-negative and non-decreasing.
void validate_config(const ChainConfig& cfg);

// One time sample of the transfer experiment: the amplitude, the two-qubit
// state of the end pair, and the discord computed by the three independent
// routes (amplitude law, X-state closed form, numeric minimizer).
struct ChainSample {
  double t = 0.0;
  std::complex<double> f;
  DensityMatrix rho;
  double d = 0.0;           // closed amplitude law of |f|
  double d_x_state = 0.0;   // X closed form on (|f|, 0, 0, 1 - |f|^2)
  double d_numeric = 0.0;   // numeric minimizer on rho
};

// Single-excitation transition amplitude from the first to the last site:
//   f(t) = [2/(n+1)] sum_k sin(k pi/(n+1)) sin(k pi n/(n+1))
//                        exp(-2 i j cos(k pi/(n+1)) t).
std::complex<double> transition_amplitude(const ChainConfig& cfg, double t);

// The joint state of the last and first sites after the transfer, as a
// function of the amplitude (basis |s_N s_0>):
//   diag = ((2-|f|^2)/4, (2-|f|^2)/4, |f|^2/4, |f|^2/4),
//   <3|rho|2> = <4|rho|1> = conj(f)/4.
// Throws NotPositiveError when |f| > 1 (beyond 1e-12).
DensityMatrix output_state(std::complex<double> f);

// Closed-form discord of the output state as a function of |f|:
//   D = (1/2) |f| (1-|f|^2) / sqrt(|f|^4 - |f|^2 + 1).
// Throws DomainError for fabs outside [0, 1].
double discord_of_amplitude(double fabs);

// Amplitude, state and all three discord routes on cfg.times.
std::vector<ChainSample> run_series(const ChainConfig& cfg);

}  // namespace tdd::spinchain
