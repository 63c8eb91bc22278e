#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tdd/discord.hpp"

namespace tdd {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

DiscordResult closed_result(double value, Method method) {
  DiscordResult out;
  out.value = value;
  out.method = method;
  out.h_min = 8.0 * value * value;  // inverse of value = (1/4) sqrt(2 h)
  return out;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::Numeric: return "numeric";
    case Method::ClassAB: return "class_ab";
    case Method::RankOne: return "rank_one";
    case Method::QuantumClassical: return "quantum_classical";
    case Method::XState: return "x_state";
  }
  return "numeric";
}

DiscordResult discord_class_ab(const CorrelationFrame& f, double tol) {
  const double a1 = std::abs(f.gamma()(0));
  const double a2 = std::abs(f.gamma()(1));
  const double a3 = std::abs(f.gamma()(2));
  const bool class_a = f.x_a().norm() <= tol;
  const bool class_b = (a1 - a2 <= tol) && (a2 - a3 <= tol);
  if (!class_a && !class_b) {
    throw NotApplicableError(
        "state is neither class A (x_a = 0) nor class B (equal |gamma|)");
  }
  return closed_result(0.5 * a2, Method::ClassAB);
}

DiscordResult discord_rank_one(const CorrelationFrame& f, const Vec3& x_a,
                               double tol) {
  if (std::abs(f.gamma()(1)) > tol || std::abs(f.gamma()(2)) > tol) {
    throw NotApplicableError(
        "correlation matrix is not rank one (gamma_2, gamma_3 not ~ 0)");
  }
  const Vec3 gamma_vec = std::abs(f.gamma()(0)) * f.w(0);
  const double d_plus = (gamma_vec + x_a).norm();
  const double d_minus = (gamma_vec - x_a).norm();
  const double denom = std::max(d_plus, d_minus);
  if (denom < 1e-14) return closed_result(0.0, Method::RankOne);
  const double value = gamma_vec.cross(x_a).norm() / (2.0 * denom);
  return closed_result(value, Method::RankOne);
}

DiscordResult discord_quantum_classical(double p, double s0_len,
                                        double s1_len, double phi) {
  if (p < 0.0 || p > 1.0)
    throw DomainError(fmt("weight p = %.6g outside [0, 1]", p));
  if (s0_len < 0.0 || s0_len > 1.0 + 1e-12)
    throw DomainError(fmt("|s0| = %.6g outside [0, 1]", s0_len));
  if (s1_len < 0.0 || s1_len > 1.0 + 1e-12)
    throw DomainError(fmt("|s1| = %.6g outside [0, 1]", s1_len));
  if (phi < 0.0 || phi > M_PI)
    throw DomainError(fmt("angle phi = %.6g outside [0, pi]", phi));
  const double value =
      0.5 * std::sin(phi) * std::min(p * s0_len, (1.0 - p) * s1_len);
  return closed_result(value, Method::QuantumClassical);
}

DiscordResult discord_x_state_piecewise(double g1, double g2, double g3,
                                        double xa3) {
  if (std::abs(g2) > std::abs(g1) + 1e-12) {
    throw DomainError("x-state labels require |g1| >= |g2|");
  }
  const double c = g1 * g1 - g3 * g3 + xa3 * xa3;
  if (c < 0.0 || std::abs(g3) >= std::abs(g1)) {
    return closed_result(0.5 * std::abs(g1), Method::XState);
  }
  const double s = g2 * g2 - g3 * g3 + xa3 * xa3;
  const auto upper_branch = [&] {
    const double num =
        g1 * g1 * (g2 * g2 + xa3 * xa3) - g2 * g2 * g3 * g3;
    return 0.5 * std::sqrt(std::max(num, 0.0) / c);
  };
  const auto lower_branch = [&] { return 0.5 * std::abs(g3); };
  double value = 0.0;
  if (s > 0.0) {
    value = upper_branch();
  } else if (s < 0.0) {
    value = lower_branch();
  } else {
    value = 0.5 * (upper_branch() + lower_branch());
  }
  return closed_result(value, Method::XState);
}

DiscordResult discord_x_state(double g1, double g2, double g3, double xa3) {
  if (std::abs(g2) > std::abs(g1) + 1e-12) {
    throw DomainError("x-state labels require |g1| >= |g2|");
  }
  const double sq1 = g1 * g1;
  const double sq2 = g2 * g2;
  const double sq3 = g3 * g3;
  const double sqx = xa3 * xa3;
  const double big = std::max(sq3, sq2 + sqx);
  const double small = std::min(sq3, sq1);
  const double num = sq1 * big - sq2 * small;
  const double den = big - small + sq1 - sq2;
  if (den < 1e-15) {
    if (num < 1e-15) return discord_x_state_piecewise(g1, g2, g3, xa3);
    throw DegenerateDenominatorError(
        fmt("compact x-state denominator %.3e underflows while the numerator "
            "does not",
            den));
  }
  return closed_result(0.5 * std::sqrt(std::max(num, 0.0) / den),
                       Method::XState);
}

}  // namespace tdd
