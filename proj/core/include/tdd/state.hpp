#pragma once

#include <optional>
#include <string>

#include "tdd/linalg.hpp"

namespace tdd {

// Tolerances every density matrix must satisfy.
struct StateTolerances {
  double hermiticity = 1e-12;   // entrywise |m - m^dagger|
  double trace = 1e-12;         // |Tr m - 1|
  double positivity = -1e-10;   // smallest eigenvalue may not fall below this
};

// A validated 4x4 two-qubit density matrix.  Instances can only be produced
// by validate() (or the make_* constructors, which funnel through it), so a
// DensityMatrix in hand is always Hermitian, unit-trace, and positive
// semidefinite within StateTolerances.
class DensityMatrix {
 public:
  const ComplexMatrix4& matrix() const { return m_; }

 private:
  explicit DensityMatrix(const ComplexMatrix4& m) : m_(m) {}
  friend DensityMatrix validate(const ComplexMatrix4& m,
                                const StateTolerances& tol);
  ComplexMatrix4 m_;
};

// Checks Hermiticity, unit trace, and positivity; throws NonHermitianError,
// TraceNotOneError, or NotPositiveError naming the violated constraint and
// the offending magnitude.
DensityMatrix validate(const ComplexMatrix4& m,
                       const StateTolerances& tol = {});

// Bloch picture of a two-qubit state: local vectors and correlation matrix,
//   rho = (1/4) [ I(x)I + x_a.sigma (x) I + I (x) x_b.sigma
//                 + sum_ij gamma(i,j) sigma_i (x) sigma_j ].
struct BlochForm {
  Vec3 x_a;
  Vec3 x_b;
  RealMatrix3 gamma;
};

// Pauli expansion coefficients of rho.  All coefficients are real for a
// Hermitian input; imaginary parts are checked against `imag_tol` and then
// discarded.
BlochForm to_bloch(const DensityMatrix& rho, double imag_tol = 1e-12);

// Reassembles rho from Bloch data and validates it (NotPositiveError when
// the coefficients do not describe a physical state).
DensityMatrix from_bloch(const BlochForm& b, const StateTolerances& tol = {});

// rho = (1/4) [ I(x)I + sum_k c_k sigma_k (x) sigma_k ].  Throws
// NotPositiveError when (c1, c2, c3) lies outside the physical tetrahedron.
DensityMatrix make_bell_diagonal(double c1, double c2, double c3);

// rho = p rho(s0) (x) |0><0| + (1-p) rho(s1) (x) |1><1| with rho(s) the qubit
// state of Bloch vector s: quantum on the first (measured) side, classical on
// the second.  Throws DomainError for p outside [0, 1] or |s0|, |s1| > 1
// (within 1e-12).
DensityMatrix make_quantum_classical(double p, const Vec3& s0, const Vec3& s1);

// Builds the matrix with nonzero entries only on the diagonal and
// anti-diagonal:
//   diag = (rho11, rho22, rho33, rho44), corners rho32 = <3|rho|2> and
//   rho41 = <4|rho|1> (their conjugates fill the upper triangle).
// Throws DomainError when the diagonal does not sum to 1 or has a negative
// entry, and NotPositiveError naming the violated 2x2 block when
// rho11*rho44 < |rho41|^2 or rho22*rho33 < |rho32|^2.
DensityMatrix make_x_state(double rho11, double rho22, double rho33,
                           double rho44, Complex rho32, Complex rho41);

// Structural classes recognised by classify(), in dispatch precedence order.
// QuantumClassical outranks RankOneGamma because it is the more specific
// structure (every quantum-classical state has a rank-<=1 correlation
// matrix); states whose decomposition degenerates to a single branch
// (p ~ 0 or 1, e.g. product states) fall through to RankOneGamma.
enum class StateTag {
  ClassA,             // x_a = 0 (vanishing measured-side Bloch vector)
  ClassB,             // |gamma_1| = |gamma_2| = |gamma_3|
  QuantumClassical,   // p rho(s0) (x) P(n) + (1-p) rho(s1) (x) P(-n) on B
  RankOneGamma,       // gamma_2 = gamma_3 = 0 (correlation matrix rank <= 1)
  XState,             // nonzero entries only on diagonal + anti-diagonal
  General,
};

const char* to_string(StateTag tag);

// Canonical X-state parameters extracted from the (corner-phase-stripped)
// matrix entries:
//   g1 = 2(|rho32| + |rho41|),  g2 = 2(|rho32| - |rho41|),
//   g3 = 1 - 2(rho22 + rho33), xa3 = 2(rho11 + rho22) - 1.
struct XStateParams {
  double g1;
  double g2;
  double g3;
  double xa3;
};

// Classical-side decomposition of a quantum-classical state.
struct QuantumClassicalParams {
  double p;      // weight of the n branch, in (0, 1)
  Vec3 s0;       // A-side Bloch vector conditioned on outcome +n
  Vec3 s1;       // A-side Bloch vector conditioned on outcome -n
  Vec3 n;        // classical-side axis (unit)
  double phi;    // angle between s0 and s1
};

struct StateClass {
  StateTag tag = StateTag::General;
  std::optional<XStateParams> x_params;
  std::optional<QuantumClassicalParams> qc_params;
};

// Detects the most specific structural class of `b` at tolerance `tol`.
// Precedence: ClassA/ClassB, then QuantumClassical, then RankOneGamma, then
// XState, then General.  For X-shaped states the payload carries the
// canonical parameters whether or not XState ends up being the tag.
StateClass classify(const BlochForm& b, double tol = 1e-12);

}  // namespace tdd
