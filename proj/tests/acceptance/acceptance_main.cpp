// Acceptance gate: one line per criterion, [PASS]/[FAIL] with the measured
// worst-case numbers and elapsed time.  Exit status is nonzero when any
// criterion fails, so this binary is the release check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <tdd/discord.hpp>
#include <tdd/linalg.hpp>
#include <tdd/oracle.hpp>
#include <tdd/spin_chain.hpp>
#include <tdd/state.hpp>

#include "support/reference.hpp"
#include "support/rng.hpp"

using namespace tdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bulk oracle sweeps use a reduced lattice; the refinement stage supplies
// the final precision, the lattice only has to land in the right basin.
constexpr int kOracleBulkPoints = 8000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// --- criterion 1: quantum-classical maximum, three routes -----------------

Outcome criterion_qc_maximum() {
  const DensityMatrix rho =
      make_quantum_classical(0.5, Vec3(0, 0, 1), Vec3(1, 0, 0));
  const double closed = discord(rho).value;
  const double numeric = discord_numeric(to_bloch(rho)).value;
  const double via_def =
      oracle::discord_definition(rho, oracle::OracleConfig{20000, 1e-12});
  const double worst = std::max({std::abs(closed - 0.25),
                                 std::abs(numeric - 0.25),
                                 std::abs(via_def - 0.25)});
  Outcome out;
  out.pass = worst <= 1e-10;
  out.detail = fmt("max deviation from 0.25 over closed/numeric/oracle = %.3e",
                   worst);
  return out;
}

// --- criterion 2: class-B mixtures across the weight grid -----------------

Outcome criterion_class_b_mixture() {
  auto rng = testrng::make_rng(9002);
  const ComplexMatrix4 singlet = make_bell_diagonal(-1, -1, -1).matrix();
  double worst_closed = 0.0;
  double worst_numeric = 0.0;
  double worst_oracle = 0.0;
  for (int pi = 0; pi <= 10; ++pi) {
    const double p = pi / 10.0;
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix2 rho_a = testrng::random_qubit_state(rng);
      const DensityMatrix rho = validate(
          p * kron(rho_a, 0.5 * identity2()) + (1.0 - p) * singlet);
      const double expect = 0.5 * (1.0 - p);
      worst_closed = std::max(worst_closed, std::abs(discord(rho).value - expect));
      worst_numeric = std::max(
          worst_numeric, std::abs(discord_numeric(to_bloch(rho)).value - expect));
      worst_oracle = std::max(
          worst_oracle,
          std::abs(oracle::discord_definition(
                       rho, oracle::OracleConfig{kOracleBulkPoints, 1e-8}) -
                   expect));
    }
  }
  Outcome out;
  out.pass = worst_closed <= 1e-9 && worst_numeric <= 1e-9 && worst_oracle <= 1e-6;
  out.detail = fmt("vs (1-p)/2: closed %.3e, numeric %.3e, oracle %.3e",
                   worst_closed, worst_numeric, worst_oracle);
  return out;
}

// --- criterion 3: X-state closed form against numeric and oracle ----------

Outcome criterion_x_states() {
  auto rng = testrng::make_rng(9003);
  double worst_numeric = 0.0;
  double worst_oracle = 0.0;
  double worst_forms = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto d = testrng::random_x_state(rng);
    const DensityMatrix rho =
        make_x_state(d.d1, d.d2, d.d3, d.d4, d.rho32, d.rho41);
    const double m32 = std::abs(d.rho32), m41 = std::abs(d.rho41);
    const double g1 = 2.0 * (m32 + m41);
    const double g2 = 2.0 * (m32 - m41);
    const double g3 = 1.0 - 2.0 * (d.d2 + d.d3);
    const double xa3 = 2.0 * (d.d1 + d.d2) - 1.0;

    const double compact = discord_x_state(g1, g2, g3, xa3).value;
    const double piecewise = discord_x_state_piecewise(g1, g2, g3, xa3).value;
    const double numeric = discord_numeric(to_bloch(rho)).value;
    const double via_def = oracle::discord_definition(
        rho, oracle::OracleConfig{kOracleBulkPoints, 1e-8});

    worst_forms = std::max(worst_forms, std::abs(compact - piecewise));
    worst_numeric = std::max(worst_numeric, std::abs(compact - numeric));
    worst_oracle = std::max(worst_oracle, std::abs(compact - via_def));
  }

  // Exact branch-boundary parameters: integer Pythagorean triples scaled by
  // powers of two, so the legs, the hypotenuse, and all their squares are
  // binary-exact and the boundary conditions hold without rounding.
  const int triples[3][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  for (const auto& t : triples) {
    for (int scale_pow = 5; scale_pow <= 9; ++scale_pow) {
      const double a = std::ldexp(double(t[0]), -scale_pow);
      const double b = std::ldexp(double(t[1]), -scale_pow);
      const double c = std::ldexp(double(t[2]), -scale_pow);
      // g3 = g1 exactly, and g2^2 + xa3^2 = g3^2 exactly.
      worst_forms = std::max(
          worst_forms, std::abs(discord_x_state(c, a, c, b).value -
                                discord_x_state_piecewise(c, a, c, b).value));
      // Same circle boundary with g3 strictly inside g1.
      worst_forms = std::max(
          worst_forms, std::abs(discord_x_state(0.75, a, c, b).value -
                                discord_x_state_piecewise(0.75, a, c, b).value));
    }
  }

  Outcome out;
  out.pass = worst_numeric <= 1e-9 && worst_oracle <= 1e-6 && worst_forms <= 1e-12;
  out.detail = fmt("1000 draws: |compact-numeric| %.3e, |compact-oracle| %.3e, "
                   "|compact-piecewise| %.3e",
                   worst_numeric, worst_oracle, worst_forms);
  return out;
}

// --- criterion 4: Bell-diagonal reduction ----------------------------------

Outcome criterion_bell_diagonal() {
  auto rng = testrng::make_rng(9004);
  double worst_mid = 0.0;
  double worst_sorted = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vec3 c = testrng::random_bell_diagonal_c(rng);
    const DensityMatrix rho = make_bell_diagonal(c(0), c(1), c(2));
    const BlochForm bloch = to_bloch(rho);
    const auto cls = classify(bloch);
    if (!cls.x_params.has_value()) {
      Outcome out;
      out.detail = "Bell-diagonal draw missed the X-shaped payload";
      return out;
    }
    const auto& xp = *cls.x_params;
    const double via_x = discord_x_state(xp.g1, xp.g2, xp.g3, xp.xa3).value;

    double mags[3] = {std::abs(c(0)), std::abs(c(1)), std::abs(c(2))};
    std::sort(mags, mags + 3);
    worst_mid = std::max(worst_mid, std::abs(via_x - 0.5 * mags[1]));

    const double via_sorted = discord_class_ab(build_frame(bloch)).value;
    worst_sorted = std::max(worst_sorted, std::abs(via_x - via_sorted));
  }
  Outcome out;
  out.pass = worst_mid <= 1e-12 && worst_sorted <= 1e-12;
  out.detail = fmt("vs half the middle |c|: %.3e; vs sorted closed form: %.3e",
                   worst_mid, worst_sorted);
  return out;
}

// --- criterion 5: rank-one formula and equatorial optimizer ----------------

Outcome criterion_rank_one() {
  auto rng = testrng::make_rng(9005);
  double worst_value = 0.0;
  double worst_theta = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const BlochForm b = to_bloch(testrng::random_rank_one_state(rng));
    const CorrelationFrame f = build_frame(b);
    const double closed = discord_rank_one(f, b.x_a).value;
    const DiscordResult numeric = discord_numeric(b);
    worst_value = std::max(worst_value, std::abs(closed - numeric.value));
    if (numeric.direction.has_value()) {
      worst_theta = std::max(
          worst_theta, std::abs(numeric.direction->theta() - kPi / 2.0));
    } else {
      worst_theta = kPi;
    }
  }
  Outcome out;
  out.pass = worst_value <= 1e-9 && worst_theta <= 1e-6;
  out.detail =
      fmt("1000 draws: |closed-numeric| %.3e, |theta - pi/2| %.3e",
          worst_value, worst_theta);
  return out;
}

// --- criterion 6: remainder-norm reduction ---------------------------------

Outcome criterion_remainder_reduction() {
  auto rng = testrng::make_rng(9006);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const BlochForm b = to_bloch(testrng::random_density_matrix(rng));
    const CorrelationFrame f = build_frame(b);
    const Vec3 e_ambient = testrng::unit_vec3(rng);
    const Direction d = Direction::from_unit(f.o() * e_ambient);
    const ObjectiveAB ab = objective_ab(f, d);
    const double sb = std::sqrt(std::max(ab.b, 0.0));
    const double via_form = 2.0 * (std::sqrt(std::max(ab.a + sb, 0.0)) +
                                   std::sqrt(std::max(ab.a - sb, 0.0)));
    const double direct =
        trace_norm(refimpl::remainder_from_bloch(b, e_ambient));
    worst = std::max(worst, std::abs(via_form - direct));
  }
  Outcome out;
  out.pass = worst <= 1e-10;
  out.detail = fmt("500 pairs: max |closed-form norm - direct norm| = %.3e", worst);
  return out;
}

// --- criterion 7: spin-chain series -----------------------------------------

Outcome criterion_spin_chain() {
  spinchain::ChainConfig cfg;
  cfg.n = 3;
  cfg.j = 1.0;
  const int steps = 500;
  for (int i = 0; i < steps; ++i) cfg.times.push_back(5.0 * i / (steps - 1));
  const auto samples = spinchain::run_series(cfg);

  double worst_x = 0.0;
  double worst_numeric = 0.0;
  double best_d = -1.0;
  double best_mod = 0.0;
  for (const auto& s : samples) {
    worst_x = std::max(worst_x, std::abs(s.d - s.d_x_state));
    worst_numeric = std::max(worst_numeric, std::abs(s.d - s.d_numeric));
    if (s.d > best_d) {
      best_d = s.d;
      best_mod = std::abs(s.f);
    }
  }
  Outcome out;
  out.pass = worst_x <= 1e-12 && worst_numeric <= 1e-8 &&
             std::abs(best_mod - 0.6) <= 0.01 && std::abs(best_d - 0.22) <= 0.01;
  out.detail =
      fmt("max |f| %.4f, max D %.4f; row-wise vs x-state %.3e, vs numeric %.3e",
          best_mod, best_d, worst_x, worst_numeric);
  return out;
}

// --- criterion 8: invariance, monotonicity, classical-side zeros -----------

Outcome criterion_properties() {
  auto rng = testrng::make_rng(9008);
  double worst_lu = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = testrng::random_density_matrix(rng);
    const ComplexMatrix2 u = testrng::random_unitary2(rng);
    const ComplexMatrix2 v = testrng::random_unitary2(rng);
    const DensityMatrix rotated =
        validate(refimpl::conjugate_local(rho.matrix(), u, v));
    worst_lu = std::max(worst_lu,
                        std::abs(discord_numeric(to_bloch(rho)).value -
                                 discord_numeric(to_bloch(rotated)).value));
  }

  double worst_mono = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = testrng::random_density_matrix(rng);
    const double q = testrng::uniform(rng, 0.1, 0.9);
    const DensityMatrix noisy = validate(refimpl::depolarize_b(rho.matrix(), q));
    const double grow = discord_numeric(to_bloch(noisy)).value -
                        discord_numeric(to_bloch(rho)).value;
    worst_mono = std::max(worst_mono, grow);
  }

  double worst_cq = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix rho = testrng::random_cq_state(rng);
    worst_cq = std::max(worst_cq, discord(rho).value);
    worst_cq = std::max(worst_cq, discord_numeric(to_bloch(rho)).value);
  }

  Outcome out;
  out.pass = worst_lu <= 1e-8 && worst_mono <= 1e-8 && worst_cq <= 1e-7;
  out.detail = fmt("LU drift %.3e, monotonicity violation %.3e, CQ value %.3e",
                   worst_lu, worst_mono, worst_cq);
  return out;
}

// --- criterion 9: oracle lattice convergence --------------------------------

Outcome criterion_oracle_convergence() {
  auto rng = testrng::make_rng(9009);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    DensityMatrix rho = make_bell_diagonal(0, 0, 0);
    switch (k % 5) {
      case 0:
        rho = testrng::random_density_matrix(rng);
        break;
      case 1: {
        const auto d = testrng::random_x_state(rng);
        rho = make_x_state(d.d1, d.d2, d.d3, d.d4, d.rho32, d.rho41);
        break;
      }
      case 2: {
        const auto d = testrng::random_qc(rng);
        rho = make_quantum_classical(d.p, d.s0, d.s1);
        break;
      }
      case 3:
        rho = testrng::random_rank_one_state(rng);
        break;
      case 4: {
        const Vec3 c = testrng::random_bell_diagonal_c(rng);
        rho = make_bell_diagonal(c(0), c(1), c(2));
        break;
      }
    }
    const double coarse =
        oracle::discord_definition(rho, oracle::OracleConfig{20000, 1e-8});
    const double fine =
        oracle::discord_definition(rho, oracle::OracleConfig{40000, 1e-8});
    worst = std::max(worst, std::abs(coarse - fine));
  }
  Outcome out;
  out.pass = worst <= 1e-7;
  out.detail = fmt("50-state panel: max |20k - 40k| = %.3e", worst);
  return out;
}

struct Criterion {
  const char* label;
  double budget_seconds;  // 0 = no budget pinned
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"quantum-classical maximum equals 1/4 via closed, numeric, oracle", 1.0,
       criterion_qc_maximum},
      {"class-B mixtures track (1-p)/2 across the weight grid", 10.0,
       criterion_class_b_mixture},
      {"X-state closed form matches numeric, oracle, and its branch form", 120.0,
       criterion_x_states},
      {"Bell-diagonal reduction to half the middle correlation", 0.0,
       criterion_bell_diagonal},
      {"rank-one closed form matches numeric with equatorial optima", 0.0,
       criterion_rank_one},
      {"remainder trace norm matches the two-scalar closed form", 0.0,
       criterion_remainder_reduction},
      {"spin-chain series: maximum location and row-wise agreement", 30.0,
       criterion_spin_chain},
      {"local-unitary invariance, noise monotonicity, classical zeros", 0.0,
       criterion_properties},
      {"oracle value stable under lattice doubling", 0.0,
       criterion_oracle_convergence},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool pass = out.pass;
    std::string note = out.detail;
    if (c.budget_seconds > 0.0) {
      note += fmt("; %.2f s vs %.0f s budget", elapsed, c.budget_seconds);
      if (elapsed > c.budget_seconds) pass = false;
    } else {
      note += fmt("; %.2f s", elapsed);
    }
    std::printf("[%s] criterion %zu: %s (%s)\n", pass ? "PASS" : "FAIL", i + 1,
                c.label, note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }

  if (failures > 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
