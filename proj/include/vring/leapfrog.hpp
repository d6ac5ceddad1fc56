/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Two-ring analysis: reduction to relative/barycentric variables, the
 * relative-motion Hamiltonian and its level-set geometry, orbit periods,
 * overtaking detection and the large-alpha threshold search.
 *
 ******************************************************************************/

#ifndef VRING_LEAPFROG_HPP
#define VRING_LEAPFROG_HPP

#include <utility>
#include <vector>

#include "vring/reduced.hpp"
#include "vring/types.hpp"

namespace vring {

/// Intensities and radius scale of a two-ring configuration. The level-set
/// machinery (roots, period, portrait) covers the case where
/// a = (a1+a2)/(a1-a2) is positive, which includes the standing assumption
/// a1 > |a2|; reduce/hamiltonian only need a1 + a2 != 0.
struct TwoRingParams {
    double a1;
    double a2;
    double alpha;

    TwoRingParams(double a1, double a2, double alpha);

    double sum() const { return a1 + a2; }
    double a() const;                     // (a1+a2)/(a1-a2); requires a1 != a2
    Vec2 xstar() const;                   // (0, 2 alpha a), the relative equilibrium
    double cstar() const;                 // (2 alpha a / e)^2
    double level_constant(double E) const; // C_E = exp(-4 pi E / (a1+a2))
    double level_energy(double c_e) const; // inverse of the above
};

/// x = zeta1 - zeta2, y = (a1 zeta1 + a2 zeta2)/(a1+a2), and back.
std::pair<Vec2, Vec2> reduce_two_ring(const Vec2& z1, const Vec2& z2,
                                      const TwoRingParams& p);
std::pair<Vec2, Vec2> inverse_two_ring(const Vec2& x, const Vec2& y,
                                       const TwoRingParams& p);

/// H(x) = -((a1+a2)/4pi) log|x|^2 + ((a1-a2)/(4 pi alpha)) x2.
double hamiltonian(const Vec2& x, const TwoRingParams& p);

/// Level-set data of one value C_E. On the periodic branch (C_E < C*) the
/// radicand C_E exp(eta/(alpha a)) - eta^2 has roots
/// eta1 < 0 < eta2 < 2 alpha a < eta3 and the x2-range [eta1, eta2] carries a
/// closed orbit; otherwise there is a single root eta_bar < 0 and no closed
/// component. Unused roots are NaN.
struct OrbitLevel {
    double c_e = 0.0;
    double energy = 0.0;
    bool periodic = false;
    double eta1 = 0.0, eta2 = 0.0, eta3 = 0.0;
    double eta_bar = 0.0;
};

OrbitLevel level_roots(double c_e, const TwoRingParams& p, double tol = 1e-12);

/// Period of the closed orbit on level C_E < C*. The inverse-square-root
/// endpoint singularities of the time integral are removed by the
/// substitution x2 = eta1 + (eta2-eta1) sin^2(phi); NonPeriodicLevelError
/// outside the periodic branch.
double period(double c_e, const TwoRingParams& p, double tol = 1e-10);

/// Circular-orbit period of the alpha -> infinity (planar) limit at the
/// same energy: 4 pi^2 R_E^2 / (a1+a2), R_E = exp(-2 pi E/(a1+a2)).
double planar_period(double E, const TwoRingParams& p);

/// Times where x1 = zeta1_1 - zeta2_1 changes sign along a two-ring
/// trajectory, refined by linear interpolation; crossings with |x1_dot|
/// below a small floor are discarded.
std::vector<double> detect_overtakings(const Trajectory& traj,
                                       const TwoRingParams& p);

struct AlphaCertificate {
    double min_separation = 0.0; // min |x_E(t)| over [0, (k+1) planar_period]
    double period = 0.0;
    double planar_period = 0.0;
    double c_e = 0.0;
    double c_star = 0.0;
};

struct AlphaThreshold {
    double alpha = 0.0;
    AlphaCertificate certificate;
};

/// Smallest alpha (doubling bracket, then 40 bisections) such that the level
/// C_E of energy E is periodic, the orbit keeps |x_E(t)| >= 4 rho over
/// [0, (k+1) planar_period], and k periods fit in that window. Requires
/// R_E > 4 rho; SearchError if the doubling passes alpha_cap.
AlphaThreshold alpha_threshold(double rho, double E, int k, double a1, double a2,
                               double alpha_cap = 1048576.0);

/// One traced component of a level set.
struct LevelCurve {
    double level = 0.0; // C_E
    bool closed = false;
    std::vector<Vec2> points;
};

/// Trace x1 = +-f(x2) for each level: the closed component over [eta1, eta2]
/// when periodic, plus the unbounded component clipped at x2 <= window
/// (window <= 0 selects an automatic ceiling above the lowest root of the
/// unbounded branch).
std::vector<LevelCurve> phase_portrait(const TwoRingParams& p,
                                       const std::vector<double>& levels,
                                       int samples, double window = 0.0);

} // namespace vring

#endif
