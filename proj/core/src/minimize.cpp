#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tdd/discord.hpp"
#include "tdd/internal/objective_eval.hpp"

namespace tdd {

namespace {

struct Candidate {
  double h = std::numeric_limits<double>::infinity();
  double theta = 0.0;
  double phi = 0.0;
};

// Deterministic ordering: smaller h wins, ties resolved lexicographically by
// (theta, phi) so concurrent or reordered evaluation cannot change results.
bool better(const Candidate& a, const Candidate& b) {
  if (a.h != b.h) return a.h < b.h;
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.phi < b.phi;
}

class Evaluator {
 public:
  explicit Evaluator(const CorrelationFrame& f)
      : gamma_(f.gamma()), x_(f.x_a_frame()) {}

  // h at raw angles; out-of-range angles map to the same unit vector the
  // trigonometry dictates, so local searches need no wrapping.
  double operator()(double theta, double phi) const {
    const double st = std::sin(theta);
    const Vec3 e(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
    return internal::objective_h_unit(gamma_, x_, e);
  }

 private:
  Vec3 gamma_;
  Vec3 x_;
};

// Standard Nelder-Mead on (theta, phi), returning the best point ever
// evaluated (not merely the final simplex vertex).
Candidate nelder_mead(const Evaluator& ev, const Candidate& start,
                      double step_theta, double step_phi, double tol,
                      int max_iter) {
  struct Vertex {
    double t, p, h;
  };
  std::array<Vertex, 3> s{
      Vertex{start.theta, start.phi, start.h},
      Vertex{start.theta + step_theta, start.phi,
             ev(start.theta + step_theta, start.phi)},
      Vertex{start.theta, start.phi + step_phi,
             ev(start.theta, start.phi + step_phi)}};

  Candidate best = start;
  const auto consider = [&](const Vertex& v) {
    Candidate c{v.h, v.t, v.p};
    if (better(c, best)) best = c;
  };
  consider(s[1]);
  consider(s[2]);

  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.h < b.h; });
    if (s[2].h - s[0].h <= tol) break;

    const double ct = 0.5 * (s[0].t + s[1].t);
    const double cp = 0.5 * (s[0].p + s[1].p);

    const auto eval_at = [&](double coeff) {
      Vertex v;
      v.t = ct + coeff * (ct - s[2].t);
      v.p = cp + coeff * (cp - s[2].p);
      v.h = ev(v.t, v.p);
      consider(v);
      return v;
    };

    const Vertex refl = eval_at(1.0);
    if (refl.h < s[0].h) {
      const Vertex expa = eval_at(2.0);
      s[2] = (expa.h < refl.h) ? expa : refl;
    } else if (refl.h < s[1].h) {
      s[2] = refl;
    } else {
      const Vertex contr = (refl.h < s[2].h) ? eval_at(0.5) : eval_at(-0.5);
      if (contr.h < std::min(refl.h, s[2].h)) {
        s[2] = contr;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].t = s[0].t + 0.5 * (s[k].t - s[0].t);
          s[k].p = s[0].p + 0.5 * (s[k].p - s[0].p);
          s[k].h = ev(s[k].t, s[k].p);
          consider(s[k]);
        }
      }
    }
  }
  return best;
}

// Golden-section line search along one coordinate; returns the best point
// ever evaluated.
Candidate golden_line(const Evaluator& ev, const Candidate& start,
                      bool along_theta, double span, double stop_width) {
  const double inv_phi = 0.6180339887498949;
  double lo = (along_theta ? start.theta : start.phi) - span;
  double hi = (along_theta ? start.theta : start.phi) + span;

  const auto value = [&](double x) {
    return along_theta ? ev(x, start.phi) : ev(start.theta, x);
  };
  const auto candidate = [&](double x, double h) {
    return along_theta ? Candidate{h, x, start.phi}
                       : Candidate{h, start.theta, x};
  };

  Candidate best = start;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double h1 = value(x1);
  double h2 = value(x2);
  if (better(candidate(x1, h1), best)) best = candidate(x1, h1);
  if (better(candidate(x2, h2), best)) best = candidate(x2, h2);

  while (hi - lo > stop_width) {
    if (h1 <= h2) {
      hi = x2;
      x2 = x1;
      h2 = h1;
      x1 = hi - inv_phi * (hi - lo);
      h1 = value(x1);
      if (better(candidate(x1, h1), best)) best = candidate(x1, h1);
    } else {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + inv_phi * (hi - lo);
      h2 = value(x2);
      if (better(candidate(x2, h2), best)) best = candidate(x2, h2);
    }
  }
  return best;
}

// Alternating golden-section sweeps with shrinking spans.  The simplex stage
// gets within coarse range of the minimizer; this stage pins the location
// precisely even where h has a kink (a^2 = b locus) or a flat boundary
// minimum, both of which slow simplex descent.
Candidate coordinate_polish(const Evaluator& ev, Candidate best) {
  double span = 2e-3;
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (bool along_theta : {true, false}) {
      const Candidate refined =
          golden_line(ev, best, along_theta, span, 1e-11);
      if (better(refined, best)) best = refined;
    }
    span *= 1e-2;
  }
  return best;
}

}  // namespace

DiscordResult discord_numeric(const BlochForm& b, const MinimizerConfig& cfg) {
  if (cfg.grid_theta < 1 || cfg.grid_phi < 1) {
    throw InvalidConfigError("minimizer grid sizes must be positive");
  }
  if (cfg.restarts < 1) {
    throw InvalidConfigError("minimizer restart count must be positive");
  }
  if (!(cfg.tol > 0.0)) {
    throw InvalidConfigError("minimizer tolerance must be positive");
  }

  const CorrelationFrame frame = build_frame(b);
  const Evaluator ev(frame);

  // Hemisphere grid (antipodal symmetry): theta in [0, pi/2] inclusive,
  // phi in [0, 2 pi).
  const int nt = cfg.grid_theta;
  const int np = cfg.grid_phi;
  const double theta_step = (nt > 1) ? (0.5 * M_PI) / (nt - 1) : 0.0;
  const double phi_step = 2.0 * M_PI / np;

  std::vector<double> sin_t(static_cast<size_t>(nt)), cos_t(static_cast<size_t>(nt));
  for (int i = 0; i < nt; ++i) {
    sin_t[static_cast<size_t>(i)] = std::sin(theta_step * i);
    cos_t[static_cast<size_t>(i)] = std::cos(theta_step * i);
  }
  std::vector<double> sin_p(static_cast<size_t>(np)), cos_p(static_cast<size_t>(np));
  for (int j = 0; j < np; ++j) {
    sin_p[static_cast<size_t>(j)] = std::sin(phi_step * j);
    cos_p[static_cast<size_t>(j)] = std::cos(phi_step * j);
  }

  // Keep the best `restarts` grid cells (sorted, deterministic ties).
  std::vector<Candidate> starts;
  starts.reserve(static_cast<size_t>(cfg.restarts) + 1);
  const Vec3& gamma = frame.gamma();
  const Vec3& x = frame.x_a_frame();
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < np; ++j) {
      const Vec3 e(sin_t[static_cast<size_t>(i)] * cos_p[static_cast<size_t>(j)],
                   sin_t[static_cast<size_t>(i)] * sin_p[static_cast<size_t>(j)],
                   cos_t[static_cast<size_t>(i)]);
      const Candidate c{internal::objective_h_unit(gamma, x, e),
                        theta_step * i, phi_step * j};
      if (starts.size() < static_cast<size_t>(cfg.restarts) ||
          better(c, starts.back())) {
        starts.insert(
            std::upper_bound(starts.begin(), starts.end(), c, better), c);
        if (starts.size() > static_cast<size_t>(cfg.restarts)) starts.pop_back();
      }
    }
  }

  Candidate best = starts.front();
  const double simplex_tol = std::max(1e-15, cfg.tol * 1e-3);
  for (const Candidate& s : starts) {
    const Candidate refined = nelder_mead(ev, s, 0.5 * std::max(theta_step, 1e-3),
                                          0.5 * std::max(phi_step, 1e-3),
                                          simplex_tol, 500);
    if (better(refined, best)) best = refined;
  }
  best = coordinate_polish(ev, best);

  const Direction dir(best.theta, best.phi);
  const ObjectiveAB ab =
      internal::objective_ab_unit(gamma, x, dir.unit());

  DiscordResult out;
  out.value = 0.25 * std::sqrt(2.0 * std::max(best.h, 0.0));
  out.method = Method::Numeric;
  out.direction = dir;
  out.h_min = best.h;
  out.residual_ab = ab.a * ab.a - ab.b;
  out.grid_used = std::array<int, 2>{nt, np};
  return out;
}

}  // namespace tdd
