#pragma once

// Internal evaluation core shared by the objective surface and the numeric
// minimizer's hot loop (which bypasses Direction construction).

#include "tdd/discord.hpp"

namespace tdd::internal {

ObjectiveAB objective_ab_unit(const Vec3& gamma, const Vec3& x, const Vec3& e);

// a^2 - b clamped at zero; raises InternalError below -1e-10.
double discriminant(const ObjectiveAB& ab);

double objective_h_unit(const Vec3& gamma, const Vec3& x, const Vec3& e);

}  // namespace tdd::internal
