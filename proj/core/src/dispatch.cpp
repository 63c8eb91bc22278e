#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tdd/discord.hpp"

namespace tdd {

namespace {

DiscordResult dispatch_closed(const BlochForm& b, const StateClass& cls) {
  switch (cls.tag) {
    case StateTag::ClassA:
    case StateTag::ClassB:
      return discord_class_ab(build_frame(b));
    case StateTag::QuantumClassical: {
      const QuantumClassicalParams& q = *cls.qc_params;
      return discord_quantum_classical(q.p, std::min(q.s0.norm(), 1.0),
                                       std::min(q.s1.norm(), 1.0), q.phi);
    }
    case StateTag::RankOneGamma:
      return discord_rank_one(build_frame(b), b.x_a);
    case StateTag::XState: {
      const XStateParams& x = *cls.x_params;
      return discord_x_state(x.g1, x.g2, x.g3, x.xa3);
    }
    case StateTag::General:
      break;
  }
  throw NotApplicableError(
      "state does not belong to any closed-form family");
}

DiscordResult run_dispatch(const DensityMatrix& rho,
                           const MinimizerConfig& cfg, bool closed_only) {
  const BlochForm b = to_bloch(rho);
  const StateClass cls = classify(b);

  DiscordResult out;
  if (cls.tag == StateTag::General && !closed_only) {
    out = discord_numeric(b, cfg);
  } else {
    out = dispatch_closed(b, cls);
  }

  if (cfg.verify) {
    double residual = 0.0;
    if (out.method != Method::Numeric) {
      const DiscordResult check = discord_numeric(b, cfg);
      residual = std::abs(out.value - check.value);
    }
    out.verify_residual = residual;
    if (residual > 1e-8) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "closed-form value disagrees with the numeric minimizer "
                    "by %.3e (method %s)",
                    residual, to_string(out.method));
      throw InternalError(buf);
    }
  }
  return out;
}

}  // namespace

DiscordResult discord(const DensityMatrix& rho, const MinimizerConfig& cfg) {
  return run_dispatch(rho, cfg, /*closed_only=*/false);
}

DiscordResult discord_closed(const DensityMatrix& rho,
                             const MinimizerConfig& cfg) {
  return run_dispatch(rho, cfg, /*closed_only=*/true);
}

DensityMatrix swap_qubits(const DensityMatrix& rho) {
  // Basis permutation |ij> -> |ji>: indices 0,1,2,3 -> 0,2,1,3.
  static const int perm[4] = {0, 2, 1, 3};
  const ComplexMatrix4& m = rho.matrix();
  ComplexMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m(perm[i], perm[j]);
  return validate(out);
}

DiscordResult discord_left(const DensityMatrix& rho,
                           const MinimizerConfig& cfg) {
  return discord(swap_qubits(rho), cfg);
}

}  // namespace tdd
