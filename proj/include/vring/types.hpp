/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Basic vector type and numeric constants.
 *
 ******************************************************************************/

#ifndef VRING_TYPES_HPP
#define VRING_TYPES_HPP

#include <Eigen/Dense>

namespace vring {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Convention used throughout: (v1,v2)^perp = (v2,-v1).
inline Vec2 perp(const Vec2& v) { return Vec2(v.y(), -v.x()); }

} // namespace vring

#endif
