#include <cmath>
#include <optional>

#include "tdd/state.hpp"

namespace tdd {

namespace {

// Tolerance of the quantum-classical structure detection; the decomposition
// is reconstructed explicitly and compared entrywise at this level.
constexpr double kQcTol = 1e-10;

// Branch weights closer than this to 0 or 1 make the decomposition
// effectively single-branch (a product-like state), which is classified by
// its correlation rank instead.
constexpr double kDegenerateWeight = 1e-10;

ComplexMatrix4 assemble(const BlochForm& b) {
  const auto& sigma = pauli();
  const ComplexMatrix2 id = identity2();
  ComplexMatrix4 m = kron(id, id);
  for (int i = 0; i < 3; ++i) {
    m += b.x_a(i) * kron(sigma[static_cast<size_t>(i)], id);
    m += b.x_b(i) * kron(id, sigma[static_cast<size_t>(i)]);
    for (int j = 0; j < 3; ++j)
      m += b.gamma(i, j) *
           kron(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
  }
  return 0.25 * m;
}

ComplexMatrix2 qubit_from_bloch(const Vec3& s) {
  const auto& sigma = pauli();
  ComplexMatrix2 m = 0.5 * ComplexMatrix2::Identity();
  for (int k = 0; k < 3; ++k) m += 0.5 * s(k) * sigma[static_cast<size_t>(k)];
  return m;
}

std::optional<QuantumClassicalParams> detect_quantum_classical(
    const BlochForm& b, const So3Factorization& f) {
  // Necessary: rank-<=1 correlation matrix.
  if (std::abs(f.gamma(1)) > kQcTol || std::abs(f.gamma(2)) > kQcTol)
    return std::nullopt;

  // Classical-side axis: the leading right singular direction, or the B
  // Bloch vector when correlations vanish entirely.
  Vec3 n;
  if (std::abs(f.gamma(0)) > kQcTol) {
    n = f.omega.row(0).transpose();
  } else if (b.x_b.norm() > kQcTol) {
    n = b.x_b.normalized();
  } else {
    return std::nullopt;  // B marginal maximally mixed and uncorrelated
  }

  const double xbn = b.x_b.dot(n);
  if ((b.x_b - xbn * n).norm() > kQcTol) return std::nullopt;

  const double p = 0.5 * (1.0 + xbn);
  if (std::min(p, 1.0 - p) <= kDegenerateWeight) return std::nullopt;

  const Vec3 u = b.gamma * n;
  const Vec3 s0 = (b.x_a + u) / (2.0 * p);
  const Vec3 s1 = (b.x_a - u) / (2.0 * (1.0 - p));

  // The candidate decomposition must reproduce the state.
  const ComplexMatrix2 proj_plus = qubit_from_bloch(n);
  const ComplexMatrix2 proj_minus = qubit_from_bloch(-n);
  const ComplexMatrix4 candidate =
      p * kron(qubit_from_bloch(s0), proj_plus) +
      (1.0 - p) * kron(qubit_from_bloch(s1), proj_minus);
  const ComplexMatrix4 target = assemble(b);
  if ((candidate - target).cwiseAbs().maxCoeff() > kQcTol) return std::nullopt;

  QuantumClassicalParams out;
  out.p = p;
  out.s0 = s0;
  out.s1 = s1;
  out.n = n;
  if (s0.norm() < 1e-12 || s1.norm() < 1e-12) {
    out.phi = 0.0;
  } else {
    out.phi = std::atan2(s0.cross(s1).norm(), s0.dot(s1));
  }
  return out;
}

// Signed singular values of the upper-left 2x2 block: s1 >= s2 >= 0 scaled
// so that s1 * s2_signed = det(block).  This is what local z rotations on
// both sides can bring the block to (they strip the corner phases).
void xy_block_signed_svd(const RealMatrix3& gamma, double* s1, double* s2) {
  const double a = gamma(0, 0), bb = gamma(0, 1), c = gamma(1, 0),
               d = gamma(1, 1);
  const double det = a * d - bb * c;
  // Closed 2x2 singular values: the large one from the stable sum form, the
  // small one as det / big (the difference form sqrt((q1 - q2)/2) cancels to
  // sqrt(eps) noise when the block is close to rank one).
  const double q1 = a * a + bb * bb + c * c + d * d;
  const double q2 = std::hypot(a * a + bb * bb - c * c - d * d,
                               2.0 * (a * c + bb * d));
  const double big = std::sqrt(std::max(0.5 * (q1 + q2), 0.0));
  *s1 = big;
  *s2 = (big > 0.0) ? det / big : 0.0;
}

}  // namespace

StateClass classify(const BlochForm& b, double tol) {
  StateClass out;
  const So3Factorization f = signed_svd_so3(b.gamma);
  const double a1 = std::abs(f.gamma(0));
  const double a2 = std::abs(f.gamma(1));
  const double a3 = std::abs(f.gamma(2));

  const bool x_shaped =
      std::abs(b.x_a(0)) <= tol && std::abs(b.x_a(1)) <= tol &&
      std::abs(b.x_b(0)) <= tol && std::abs(b.x_b(1)) <= tol &&
      std::abs(b.gamma(0, 2)) <= tol && std::abs(b.gamma(1, 2)) <= tol &&
      std::abs(b.gamma(2, 0)) <= tol && std::abs(b.gamma(2, 1)) <= tol;
  if (x_shaped) {
    double g1 = 0.0, g2 = 0.0;
    xy_block_signed_svd(b.gamma, &g1, &g2);
    out.x_params = XStateParams{g1, g2, b.gamma(2, 2), b.x_a(2)};
  }

  const std::optional<QuantumClassicalParams> qc =
      detect_quantum_classical(b, f);
  if (qc) out.qc_params = qc;

  const bool class_a = b.x_a.norm() <= tol;
  const bool class_b = (a1 - a2 <= tol) && (a2 - a3 <= tol);
  const bool rank_one = a2 <= tol && a3 <= tol;

  if (class_a) {
    out.tag = StateTag::ClassA;
  } else if (class_b) {
    out.tag = StateTag::ClassB;
  } else if (qc) {
    out.tag = StateTag::QuantumClassical;
  } else if (rank_one) {
    out.tag = StateTag::RankOneGamma;
  } else if (x_shaped) {
    out.tag = StateTag::XState;
  } else {
    out.tag = StateTag::General;
  }
  return out;
}

}  // namespace tdd
