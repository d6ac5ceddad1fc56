/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * The limiting dynamical system for N ring centers: planar point-vortex
 * interaction through K plus the constant axial drift a_i/(4 pi alpha).
 *
 ******************************************************************************/

#ifndef VRING_REDUCED_HPP
#define VRING_REDUCED_HPP

#include <vector>

#include "vring/types.hpp"

namespace vring {

struct ReducedState {
    std::vector<Vec2> centers;       // zeta^i
    std::vector<double> intensities; // a_i
    double alpha = 1.0;

    int size() const { return static_cast<int>(centers.size()); }
};

/// zeta_dot^i = sum_{j != i} a_j K(zeta^i - zeta^j) + a_i/(4 pi alpha) e1.
/// Coincident centers raise CollisionError.
std::vector<Vec2> reduced_rhs(const ReducedState& state);

struct Trajectory {
    std::vector<double> times;         // strictly increasing, starts at 0
    std::vector<ReducedState> states;  // states.size() == times.size()
    double min_separation = 0.0;       // smallest pairwise distance observed
};

enum class OdeScheme { RK4, Midpoint };

/// Fixed-step integration to time T (the final step is shortened to land on
/// T exactly). Aborts with CollisionError, carrying the abort time, if the
/// minimum pairwise separation falls below `collision_floor`.
Trajectory integrate_reduced(const ReducedState& state0, double T, double dt,
                             OdeScheme scheme = OdeScheme::RK4,
                             double collision_floor = 1e-8);

} // namespace vring

#endif
