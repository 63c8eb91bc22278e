#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "tdd/errors.hpp"

namespace tdd {

using Complex = std::complex<double>;
using ComplexMatrix2 = Eigen::Matrix2cd;
using ComplexMatrix4 = Eigen::Matrix4cd;
using RealMatrix3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

// Result of the sign-carrying real 3x3 factorization g = o^T diag(gamma) omega
// with o and omega proper rotations (det = +1).  The diagonal entries gamma
// are ordered |gamma[0]| >= |gamma[1]| >= |gamma[2]|; their magnitudes are the
// singular values of g, and sign(gamma[0]*gamma[1]*gamma[2]) = sign(det g).
struct So3Factorization {
  RealMatrix3 o;
  RealMatrix3 omega;
  Vec3 gamma;
};

// Eigenvalues of a 4x4 Hermitian matrix, ascending.  The input must be
// Hermitian entrywise within `hermiticity_tol`; otherwise NonHermitianError
// names the worst offending entry.  The matrix is symmetrized as
// (m + m^dagger)/2 before solving so the tolerated asymmetry cannot leak
// into the result.
std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& m,
                                            double hermiticity_tol = 1e-12);

// Trace norm ||m||_1 = sum of singular values.  Hermitian inputs (within
// `hermiticity_tol`) take the fast path sum(|eigenvalue|) through
// hermitian_eigenvalues; everything else goes through a singular value
// decomposition.
double trace_norm(const ComplexMatrix4& m, double hermiticity_tol = 1e-12);

// Sign-carrying factorization of a real 3x3 matrix into proper rotations and
// a signed diagonal (see So3Factorization).  Always succeeds.
So3Factorization signed_svd_so3(const RealMatrix3& g);

// 3-vector cross and dot products (thin wrappers kept for call-site clarity).
Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);

// The Pauli matrices sigma_x, sigma_y, sigma_z (in that order).
const std::array<ComplexMatrix2, 3>& pauli();

// The 2x2 identity.
const ComplexMatrix2& identity2();

// Kronecker product of two 2x2 blocks, row-major qubit ordering
// (first factor = left qubit).
ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);

}  // namespace tdd
