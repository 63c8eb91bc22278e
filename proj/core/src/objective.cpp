#include <cmath>
#include <cstdio>

#include "tdd/discord.hpp"
#include "tdd/internal/objective_eval.hpp"

namespace tdd {

namespace internal {

ObjectiveAB objective_ab_unit(const Vec3& gamma, const Vec3& x, const Vec3& e) {
  const double exa = e.dot(x);
  double q = 0.0;
  double chi_sq = 0.0;
  for (int k = 0; k < 3; ++k) {
    q += gamma(k) * gamma(k) * (1.0 - e(k) * e(k));
    const double chi_k = gamma(k) * (x(k) - e(k) * exa);
    chi_sq += chi_k * chi_k;
  }
  const double g1 = gamma(1) * gamma(2) * e(0);
  const double g2 = gamma(2) * gamma(0) * e(1);
  const double g3 = gamma(0) * gamma(1) * e(2);
  const double x_perp_sq = std::max(x.squaredNorm() - exa * exa, 0.0);

  ObjectiveAB out;
  out.a = q + x_perp_sq;
  out.b = 4.0 * (chi_sq + g1 * g1 + g2 * g2 + g3 * g3);
  return out;
}

double discriminant(const ObjectiveAB& ab) {
  const double disc = ab.a * ab.a - ab.b;
  if (disc < 0.0) {
    if (disc < -1e-10) {
      char buf[120];
      std::snprintf(buf, sizeof buf,
                    "objective discriminant a^2 - b = %.3e is negative beyond "
                    "tolerance",
                    disc);
      throw InternalError(buf);
    }
    return 0.0;
  }
  return disc;
}

// h = a + sqrt(a^2 - b) evaluated without forming a^2 - b, which cancels
// catastrophically on the locus a^2 = b where the minima of h live (the
// direct difference leaves sqrt(eps) ~ 1e-8 noise in h).  Algebraically,
// restricting W = diag(gamma^2) - x x^T to the plane orthogonal to e as a
// 2x2 symmetric matrix A gives a^2 - b = (lambda_1(A) - lambda_2(A))^2 and
//   h = 2 (lambda_max(A) + |x_perp|^2),
// which only adds and squares — every term is computed to relative accuracy.
double objective_h_unit(const Vec3& gamma, const Vec3& x, const Vec3& e) {
  // Right-handed orthonormal basis {v1, v2} of the plane orthogonal to e,
  // seeded from the coordinate axis least aligned with e (deterministic).
  int axis = 0;
  if (std::abs(e(1)) < std::abs(e(axis))) axis = 1;
  if (std::abs(e(2)) < std::abs(e(axis))) axis = 2;
  Vec3 t = Vec3::Zero();
  t(axis) = 1.0;
  const Vec3 v1 = e.cross(t).normalized();
  const Vec3 v2 = e.cross(v1);

  const auto w_form = [&](const Vec3& u, const Vec3& v) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += gamma(k) * gamma(k) * u(k) * v(k);
    return s - x.dot(u) * x.dot(v);
  };
  const double a11 = w_form(v1, v1);
  const double a22 = w_form(v2, v2);
  const double a12 = w_form(v1, v2);

  const double y1 = x.dot(v1);
  const double y2 = x.dot(v2);
  const double mean = 0.5 * (a11 + a22);
  const double radius = std::hypot(0.5 * (a11 - a22), a12);
  return 2.0 * (mean + radius + y1 * y1 + y2 * y2);
}

}  // namespace internal

ObjectiveAB objective_ab(const CorrelationFrame& f, const Direction& d) {
  return internal::objective_ab_unit(f.gamma(), f.x_a_frame(), d.unit());
}

double objective_h(const CorrelationFrame& f, const Direction& d) {
  return internal::objective_h_unit(f.gamma(), f.x_a_frame(), d.unit());
}

}  // namespace tdd
