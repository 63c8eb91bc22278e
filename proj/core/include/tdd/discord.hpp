#pragma once

#include <array>
#include <optional>

#include "tdd/state.hpp"

namespace tdd {

// Spherical direction in a correlation frame, with the unit vector cached.
class Direction {
 public:
  Direction(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  const Vec3& unit() const { return unit_; }  // (sin t cos p, sin t sin p, cos t)

  // Recovers canonical angles (theta in [0, pi], phi in [0, 2 pi)) from a
  // unit vector; phi = 0 at the poles.
  static Direction from_unit(const Vec3& e);

 private:
  double theta_;
  double phi_;
  Vec3 unit_;
};

// Correlation frame of a state: the proper rotations and signed diagonal of
// its correlation matrix (Gamma = o^T diag(gamma) omega), the measured-side
// Bloch vector, and that vector's coordinates in the frame {w_k} (the rows
// of o).  |gamma| is sorted descending.
class CorrelationFrame {
 public:
  CorrelationFrame(const RealMatrix3& o, const RealMatrix3& omega,
                   const Vec3& gamma, const Vec3& x_a);

  const RealMatrix3& o() const { return o_; }
  const RealMatrix3& omega() const { return omega_; }
  const Vec3& gamma() const { return gamma_; }
  const Vec3& x_a() const { return x_a_; }              // ambient coordinates
  const Vec3& x_a_frame() const { return x_a_frame_; }  // {w_k} coordinates
  Vec3 w(int k) const { return o_.row(k).transpose(); }

 private:
  RealMatrix3 o_;
  RealMatrix3 omega_;
  Vec3 gamma_;
  Vec3 x_a_;
  Vec3 x_a_frame_;
};

// Frame of b's correlation matrix.  When the correlation matrix has rank
// <= 1 (|gamma_2|, |gamma_3| below 1e-12) and x_a has a component orthogonal
// to w_1, the residual freedom of rotating {w_2, w_3} about w_1 is fixed by
// placing w_2 along that orthogonal component, so x_a lies in span(w_1, w_2).
CorrelationFrame build_frame(const BlochForm& b);

// The two scalars controlling the spectrum of the measurement remainder in
// direction e: a = Q + |x_perp|^2 and b = 4(|chi|^2 + |g|^2).
struct ObjectiveAB {
  double a;
  double b;
};

ObjectiveAB objective_ab(const CorrelationFrame& f, const Direction& d);

// h(e) = a + sqrt(a^2 - b), evaluated through an algebraically equivalent
// cancellation-free form (a 2x2 eigenvalue gap), so the square root stays
// accurate on the a^2 = b locus where the minima sit.
double objective_h(const CorrelationFrame& f, const Direction& d);

// Closed forms used by the dispatcher, tagged on the result.
enum class Method { Numeric, ClassAB, RankOne, QuantumClassical, XState };
const char* to_string(Method m);

struct DiscordResult {
  double value = 0.0;                      // in [0, 1]
  Method method = Method::Numeric;
  std::optional<Direction> direction;      // optimizer of h, when exposed
  std::optional<double> h_min;             // value = (1/4) sqrt(2 h_min)
  std::optional<double> residual_ab;       // a^2 - b at the reported optimum
  std::optional<std::array<int, 2>> grid_used;
  std::optional<double> verify_residual;   // |value - numeric| when verified
};

struct MinimizerConfig {
  int grid_theta = 128;   // theta cells on [0, pi/2] (antipodal reduction)
  int grid_phi = 256;     // phi cells on [0, 2 pi)
  int restarts = 8;       // local refinements started from the best cells
  double tol = 1e-10;     // convergence tolerance in h
  bool verify = false;    // dispatcher double-checks against the numeric path
};

// Global minimization of h over the hemisphere: coarse grid, multi-start
// simplex descent, then a deterministic coordinate polish.  The result is
// certified <= the grid minimum.  Throws InvalidConfig for non-positive
// grid sizes, restarts, or tolerance.
DiscordResult discord_numeric(const BlochForm& b,
                              const MinimizerConfig& cfg = {});

// Class A (x_a = 0) and class B (all |gamma_k| equal): D = |gamma_2|/2 with
// |gamma| sorted descending.  NotApplicable when neither predicate holds.
DiscordResult discord_class_ab(const CorrelationFrame& f, double tol = 1e-12);

// Rank-one correlation matrix (gamma_2 = gamma_3 = 0):
//   D = |g1 w1 ^ x_a| / (2 max{|g1 w1 + x_a|, |g1 w1 - x_a|}),
// 0 in the collinear degenerate case.  NotApplicable when the rank-one
// predicate fails.
DiscordResult discord_rank_one(const CorrelationFrame& f, const Vec3& x_a,
                               double tol = 1e-12);

// Quantum-classical states: D = (sin(phi)/2) min{p s0_len, (1-p) s1_len},
// phi the angle between the two conditional Bloch vectors.  DomainError for
// p, s0_len, s1_len outside [0, 1] or phi outside [0, pi].
DiscordResult discord_quantum_classical(double p, double s0_len,
                                        double s1_len, double phi);

// X states in the canonical labeling (|g1| >= |g2|, see XStateParams):
// compact closed form; falls back to the piecewise form when the compact
// denominator underflows below 1e-15 together with the numerator, and throws
// DegenerateDenominator when the denominator alone underflows.
DiscordResult discord_x_state(double g1, double g2, double g3, double xa3);

// The piecewise (branch) form of the X-state value; at branch boundaries the
// step function takes the value 1/2, implemented by averaging the two
// coinciding branch values.
DiscordResult discord_x_state_piecewise(double g1, double g2, double g3,
                                        double xa3);

// Full dispatcher: classifies rho and routes it to the most specific closed
// form, else the numeric minimizer; records the method taken.  With
// cfg.verify set, also runs the numeric path and throws InternalError if
// the two disagree beyond 1e-8 (the residual is recorded on the result).
DiscordResult discord(const DensityMatrix& rho,
                      const MinimizerConfig& cfg = {});

// Same classification, but routed only to closed forms: throws
// NotApplicable for states outside every closed-form family.
DiscordResult discord_closed(const DensityMatrix& rho,
                             const MinimizerConfig& cfg = {});

// Discord measured on the second qubit: swaps the qubits and calls discord.
DiscordResult discord_left(const DensityMatrix& rho,
                           const MinimizerConfig& cfg = {});

// Conjugation by the two-qubit SWAP (basis permutation |ij> -> |ji>).
DensityMatrix swap_qubits(const DensityMatrix& rho);

}  // namespace tdd
