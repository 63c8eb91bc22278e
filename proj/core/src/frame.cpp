#include <algorithm>
#include <cmath>

#include "tdd/discord.hpp"

namespace tdd {

namespace {

// Wraps an angle into [0, 2 pi).
double wrap_phi(double phi) {
  const double two_pi = 2.0 * M_PI;
  double out = std::fmod(phi, two_pi);
  if (out < 0.0) out += two_pi;
  if (out >= two_pi) out = 0.0;
  return out;
}

}  // namespace

Direction::Direction(double theta, double phi) {
  // Canonicalize: reflect theta into [0, pi] (each reflection shifts phi by
  // pi, preserving the unit vector), then wrap phi into [0, 2 pi).
  double t = std::fmod(theta, 2.0 * M_PI);
  if (t < 0.0) t += 2.0 * M_PI;
  if (t > M_PI) {
    t = 2.0 * M_PI - t;
    phi += M_PI;
  }
  theta_ = t;
  phi_ = wrap_phi(phi);
  const double st = std::sin(theta_);
  unit_ = Vec3(st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_));
}

Direction Direction::from_unit(const Vec3& e) {
  const Vec3 u = e.normalized();
  const double z = std::clamp(u.z(), -1.0, 1.0);
  const double theta = std::acos(z);
  double phi = 0.0;
  if (u.head<2>().norm() > 0.0) phi = wrap_phi(std::atan2(u.y(), u.x()));
  return Direction(theta, phi);
}

CorrelationFrame::CorrelationFrame(const RealMatrix3& o,
                                   const RealMatrix3& omega, const Vec3& gamma,
                                   const Vec3& x_a)
    : o_(o), omega_(omega), gamma_(gamma), x_a_(x_a), x_a_frame_(o * x_a) {}

CorrelationFrame build_frame(const BlochForm& b) {
  const So3Factorization f = signed_svd_so3(b.gamma);
  RealMatrix3 o = f.o;

  // Rank-one case: {w_2, w_3} only multiply (near-)zero diagonal entries, so
  // they are free to rotate about w_1.  Pin w_2 to x_a's component
  // orthogonal to w_1: the objective then depends on phi only through the
  // plane spanned by w_1 and x_a, and reported angles become reproducible.
  if (std::abs(f.gamma(1)) <= 1e-12 && std::abs(f.gamma(2)) <= 1e-12) {
    const Vec3 w1 = o.row(0).transpose();
    const Vec3 x_perp = b.x_a - b.x_a.dot(w1) * w1;
    if (x_perp.norm() > 1e-12) {
      const Vec3 w2 = x_perp.normalized();
      const Vec3 w3 = w1.cross(w2);
      o.row(1) = w2.transpose();
      o.row(2) = w3.transpose();
    }
  }

  return CorrelationFrame(o, f.omega, f.gamma, b.x_a);
}

}  // namespace tdd
