#include "tdd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tdd {

namespace {

// Largest |m(i,j) - conj(m(j,i))| and its position.
struct HermiticityCheck {
  double residual = 0.0;
  int row = 0;
  int col = 0;
};

HermiticityCheck hermiticity_residual(const ComplexMatrix4& m) {
  HermiticityCheck out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double r = std::abs(m(i, j) - std::conj(m(j, i)));
      if (r > out.residual) {
        out.residual = r;
        out.row = i;
        out.col = j;
      }
    }
  }
  return out;
}

std::string format_residual(const char* what, const HermiticityCheck& c) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s: |m(%d,%d) - conj(m(%d,%d))| = %.3e exceeds tolerance",
                what, c.row, c.col, c.col, c.row, c.residual);
  return buf;
}

}  // namespace

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& m,
                                            double hermiticity_tol) {
  const HermiticityCheck check = hermiticity_residual(m);
  if (check.residual > hermiticity_tol) {
    throw NonHermitianError(format_residual("non-Hermitian input", check));
  }
  const ComplexMatrix4 sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver;
  solver.compute(sym, Eigen::EigenvaluesOnly);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

double trace_norm(const ComplexMatrix4& m, double hermiticity_tol) {
  if (hermiticity_residual(m).residual <= hermiticity_tol) {
    const std::array<double, 4> ev = hermitian_eigenvalues(m, hermiticity_tol);
    double sum = 0.0;
    for (double v : ev) sum += std::abs(v);
    return sum;
  }
  const Eigen::JacobiSVD<ComplexMatrix4> svd(m);
  return svd.singularValues().sum();
}

So3Factorization signed_svd_so3(const RealMatrix3& g) {
  Eigen::JacobiSVD<RealMatrix3> svd(g,
                                    Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealMatrix3 u = svd.matrixU();
  RealMatrix3 v = svd.matrixV();
  Vec3 gamma = svd.singularValues();  // descending, non-negative

  // Push any improper part into the sign of the smallest diagonal entry so
  // both factors become proper rotations while u * diag(gamma) * v^T stays
  // exactly equal to g.
  if (u.determinant() < 0.0) {
    u.col(2) *= -1.0;
    gamma(2) = -gamma(2);
  }
  if (v.determinant() < 0.0) {
    v.col(2) *= -1.0;
    gamma(2) = -gamma(2);
  }

  So3Factorization out;
  out.o = u.transpose();
  out.omega = v.transpose();
  out.gamma = gamma;
  return out;
}

Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }

const std::array<ComplexMatrix2, 3>& pauli() {
  static const std::array<ComplexMatrix2, 3> sigma = [] {
    std::array<ComplexMatrix2, 3> s;
    s[0] << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    s[1] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    s[2] << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return s;
  }();
  return sigma;
}

const ComplexMatrix2& identity2() {
  static const ComplexMatrix2 id = ComplexMatrix2::Identity();
  return id;
}

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace tdd
