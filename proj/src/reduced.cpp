/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Fixed-step integration of the point-vortex-with-drift system.
 *
 ******************************************************************************/

#include "vring/reduced.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <string>

#include "vring/errors.hpp"
#include "vring/kernels.hpp"

namespace vring {

std::vector<Vec2> reduced_rhs(const ReducedState& state) {
    const int n = state.size();
    std::vector<Vec2> v(n);
    for (int i = 0; i < n; ++i) {
        Vec2 u(state.intensities[i] / (4.0 * kPi * state.alpha), 0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            const Vec2 d = state.centers[i] - state.centers[j];
            if (d.squaredNorm() == 0.0)
                throw CollisionError("reduced_rhs: coincident centers", 0.0);
            u += state.intensities[j] * eval_K(d);
        }
        v[i] = u;
    }
    return v;
}

namespace {

double min_separation(const ReducedState& s) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            m = std::min(m, (s.centers[i] - s.centers[j]).norm());
    return m;
}

ReducedState advance(const ReducedState& s, double dt, OdeScheme scheme) {
    const int n = s.size();
    ReducedState out = s;
    if (scheme == OdeScheme::Midpoint) {
        const auto k1 = reduced_rhs(s);
        ReducedState half = s;
        for (int i = 0; i < n; ++i)
            half.centers[i] += 0.5 * dt * k1[i];
        const auto k2 = reduced_rhs(half);
        for (int i = 0; i < n; ++i)
            out.centers[i] += dt * k2[i];
        return out;
    }
    const auto k1 = reduced_rhs(s);
    ReducedState tmp = s;
    for (int i = 0; i < n; ++i)
        tmp.centers[i] = s.centers[i] + 0.5 * dt * k1[i];
    const auto k2 = reduced_rhs(tmp);
    for (int i = 0; i < n; ++i)
        tmp.centers[i] = s.centers[i] + 0.5 * dt * k2[i];
    const auto k3 = reduced_rhs(tmp);
    for (int i = 0; i < n; ++i)
        tmp.centers[i] = s.centers[i] + dt * k3[i];
    const auto k4 = reduced_rhs(tmp);
    for (int i = 0; i < n; ++i)
        out.centers[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    return out;
}

} // namespace

Trajectory integrate_reduced(const ReducedState& state0, double T, double dt,
                             OdeScheme scheme, double collision_floor) {
    if (!(T > 0.0) || !(dt > 0.0))
        throw DomainError("integrate_reduced: T and dt must be positive");
    Trajectory traj;
    traj.min_separation = state0.size() > 1 ? min_separation(state0)
                                            : std::numeric_limits<double>::infinity();
    if (traj.min_separation < collision_floor)
        throw CollisionError("integrate_reduced: singular initial state", 0.0);

    traj.times.push_back(0.0);
    traj.states.push_back(state0);
    ReducedState cur = state0;
    double t = 0.0;
    while (t < T) {
        const double h = std::min(dt, T - t);
        cur = advance(cur, h, scheme);
        t += h;
        if (T - t < 1e-12 * T)
            t = T;
        if (cur.size() > 1) {
            const double sep = min_separation(cur);
            traj.min_separation = std::min(traj.min_separation, sep);
            if (sep < collision_floor)
                throw CollisionError("integrate_reduced: centers closer than the "
                                     "collision floor at t = " + std::to_string(t), t);
        }
        traj.times.push_back(t);
        traj.states.push_back(cur);
    }
    return traj;
}

} // namespace vring
