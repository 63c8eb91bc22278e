#include <cmath>
#include <limits>

#include "tdd/oracle.hpp"

namespace tdd::oracle {

namespace {

// 0.5 * ||rho - Pi_e(rho)||_1 with the trace norm taken from the full
// eigenvalue spectrum of the (traceless Hermitian) remainder.
double disturbance(const ComplexMatrix4& rho, const Vec3& e) {
  const ComplexMatrix4 remainder = rho - apply_measurement_channel(rho, e);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver;
  solver.compute(remainder, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Vec3 unit_from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return Vec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

}  // namespace

ComplexMatrix4 apply_measurement_channel(const ComplexMatrix4& rho,
                                         const Vec3& e_ambient) {
  const auto& sigma = pauli();
  ComplexMatrix2 p2 = 0.5 * ComplexMatrix2::Identity();
  for (int k = 0; k < 3; ++k) p2 += 0.5 * e_ambient(k) * sigma[static_cast<size_t>(k)];
  const ComplexMatrix2 q2 = ComplexMatrix2::Identity() - p2;
  const ComplexMatrix4 p = kron(p2, identity2());
  const ComplexMatrix4 q = kron(q2, identity2());
  return p * rho * p + q * rho * q;
}

ComplexMatrix4 apply_measurement_channel(const DensityMatrix& rho,
                                         const Direction& d) {
  return apply_measurement_channel(rho.matrix(), d.unit());
}

double discord_definition(const DensityMatrix& rho, const OracleConfig& cfg) {
  if (cfg.points < 1) {
    throw InvalidConfigError("oracle lattice size must be positive");
  }
  if (!(cfg.tol > 0.0)) {
    throw InvalidConfigError("oracle refinement tolerance must be positive");
  }

  const ComplexMatrix4& m = rho.matrix();

  // Fibonacci hemisphere lattice; ties keep the smallest lattice index so
  // a parallel evaluation would reduce to the same winner.
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < cfg.points; ++i) {
    const double z = (i + 0.5) / cfg.points;
    const double r = std::sqrt(std::max(1.0 - z * z, 0.0));
    const double phi = golden_angle * i;
    const Vec3 e(r * std::cos(phi), r * std::sin(phi), z);
    const double d = disturbance(m, e);
    if (d < best) {
      best = d;
      best_theta = std::acos(z);
      best_phi = phi;
    }
  }

  // Bisecting pattern search on the two spherical angles.
  double step = std::sqrt(2.0 * M_PI / cfg.points);
  while (step > cfg.tol) {
    bool moved = false;
    const double t = best_theta;
    const double p = best_phi;
    const double trial_theta[4] = {t - step, t + step, t, t};
    const double trial_phi[4] = {p, p, p - step, p + step};
    for (int k = 0; k < 4; ++k) {
      const double d =
          disturbance(m, unit_from_angles(trial_theta[k], trial_phi[k]));
      if (d < best) {
        best = d;
        best_theta = trial_theta[k];
        best_phi = trial_phi[k];
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace tdd::oracle
