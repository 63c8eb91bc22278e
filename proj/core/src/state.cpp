#include "tdd/state.hpp"

#include <cmath>
#include <cstdio>

namespace tdd {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

ComplexMatrix2 qubit_from_bloch(const Vec3& s) {
  const auto& sigma = pauli();
  ComplexMatrix2 m = 0.5 * ComplexMatrix2::Identity();
  for (int k = 0; k < 3; ++k) m += 0.5 * s(k) * sigma[static_cast<size_t>(k)];
  return m;
}

}  // namespace

DensityMatrix validate(const ComplexMatrix4& m, const StateTolerances& tol) {
  double herm = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
  if (herm > tol.hermiticity) {
    throw NonHermitianError(
        fmt("density matrix not Hermitian: max |m - m^dagger| = %.3e", herm));
  }

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > tol.trace) {
    throw TraceNotOneError(
        fmt("density matrix trace differs from 1 by %.3e", trace_err));
  }

  const std::array<double, 4> ev = hermitian_eigenvalues(m, tol.hermiticity);
  if (ev[0] < tol.positivity) {
    throw NotPositiveError(
        fmt("density matrix not positive semidefinite: min eigenvalue %.3e",
            ev[0]));
  }
  return DensityMatrix(m);
}

BlochForm to_bloch(const DensityMatrix& rho, double imag_tol) {
  const auto& sigma = pauli();
  const ComplexMatrix2 id = identity2();
  const ComplexMatrix4& m = rho.matrix();

  const auto coeff = [&](const ComplexMatrix4& op) {
    const Complex t = (m * op).trace();
    if (std::abs(t.imag()) > imag_tol) {
      throw InternalError(fmt(
          "Pauli coefficient has non-negligible imaginary part %.3e",
          t.imag()));
    }
    return t.real();
  };

  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x_a(i) = coeff(kron(sigma[static_cast<size_t>(i)], id));
    b.x_b(i) = coeff(kron(id, sigma[static_cast<size_t>(i)]));
    for (int j = 0; j < 3; ++j)
      b.gamma(i, j) =
          coeff(kron(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]));
  }
  return b;
}

DensityMatrix from_bloch(const BlochForm& b, const StateTolerances& tol) {
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
  m *= 0.25;
  return validate(m, tol);
}

DensityMatrix make_bell_diagonal(double c1, double c2, double c3) {
  BlochForm b;
  b.x_a.setZero();
  b.x_b.setZero();
  b.gamma = Vec3(c1, c2, c3).asDiagonal();
  return from_bloch(b);
}

DensityMatrix make_quantum_classical(double p, const Vec3& s0,
                                     const Vec3& s1) {
  if (p < 0.0 || p > 1.0) {
    throw DomainError(fmt("mixing weight p = %.6g outside [0, 1]", p));
  }
  if (s0.norm() > 1.0 + 1e-12) {
    throw DomainError(fmt("|s0| = %.6g exceeds 1", s0.norm()));
  }
  if (s1.norm() > 1.0 + 1e-12) {
    throw DomainError(fmt("|s1| = %.6g exceeds 1", s1.norm()));
  }

  ComplexMatrix2 ket0 = ComplexMatrix2::Zero();
  ket0(0, 0) = 1.0;
  ComplexMatrix2 ket1 = ComplexMatrix2::Zero();
  ket1(1, 1) = 1.0;
  const ComplexMatrix4 m = p * kron(qubit_from_bloch(s0), ket0) +
                           (1.0 - p) * kron(qubit_from_bloch(s1), ket1);
  return validate(m);
}

DensityMatrix make_x_state(double rho11, double rho22, double rho33,
                           double rho44, Complex rho32, Complex rho41) {
  const double diag[4] = {rho11, rho22, rho33, rho44};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (diag[i] < 0.0) {
      throw DomainError(fmt("x-state diagonal entry %.6g is negative", diag[i]));
    }
    sum += diag[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError(fmt("x-state diagonal sums to 1 %+.3e", sum - 1.0));
  }
  if (rho11 * rho44 - std::norm(rho41) < -1e-14) {
    throw NotPositiveError(
        fmt("x-state positivity violated on the outer block: "
            "rho11*rho44 - |rho41|^2 = %.3e",
            rho11 * rho44 - std::norm(rho41)));
  }
  if (rho22 * rho33 - std::norm(rho32) < -1e-14) {
    throw NotPositiveError(
        fmt("x-state positivity violated on the inner block: "
            "rho22*rho33 - |rho32|^2 = %.3e",
            rho22 * rho33 - std::norm(rho32)));
  }

  ComplexMatrix4 m = ComplexMatrix4::Zero();
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(2, 1) = rho32;
  m(1, 2) = std::conj(rho32);
  m(3, 0) = rho41;
  m(0, 3) = std::conj(rho41);
  return validate(m);
}

const char* to_string(StateTag tag) {
  switch (tag) {
    case StateTag::ClassA: return "class_a";
    case StateTag::ClassB: return "class_b";
    case StateTag::QuantumClassical: return "quantum_classical";
    case StateTag::RankOneGamma: return "rank_one_gamma";
    case StateTag::XState: return "x_state";
    case StateTag::General: return "general";
  }
  return "general";
}

}  // namespace tdd
