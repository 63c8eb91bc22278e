#pragma once

#include "tdd/discord.hpp"
#include "tdd/state.hpp"

namespace tdd::oracle {

struct OracleConfig {
  int points = 20000;   // Fibonacci lattice points on the hemisphere
  double tol = 1e-8;    // local refinement step threshold, radians
};

// The measurement channel along an ambient direction:
// rho -> P rho P + Q rho Q with P = ((I + e.sigma)/2) (x) I and Q its
// complement, e the unit vector of d in the state's own Pauli axes.
ComplexMatrix4 apply_measurement_channel(const DensityMatrix& rho,
                                         const Direction& d);
ComplexMatrix4 apply_measurement_channel(const ComplexMatrix4& rho,
                                         const Vec3& e_ambient);

// Definition-level evaluation of the discord: minimizes
//   (1/2) || rho - Pi_e(rho) ||_1
// over a Fibonacci hemisphere lattice of cfg.points directions, then refines
// the best one by bisecting steps on the two spherical angles down to
// cfg.tol.  The trace norm comes from the full eigenvalue spectrum of the
// remainder, keeping this path independent of the closed-form objective.
// Throws InvalidConfig for non-positive points or tolerance.
double discord_definition(const DensityMatrix& rho,
                          const OracleConfig& cfg = {});

}  // namespace tdd::oracle
