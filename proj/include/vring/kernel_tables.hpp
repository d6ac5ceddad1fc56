/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Tabulated fast path for the kernel special functions.
 *
 * The O(N^2) particle loops cannot afford a quadrature per pair. The three
 * theta-integrals depend on the single similarity variable s = |x-y|/sqrt(A),
 * so their smooth parts are precomputed once on a log grid:
 *
 *   G1(s) = I1(s) - 1/s^2          (pole split off analytically)
 *   G2(s) = I2(s)
 *   D0(s) = I0(s) - log((2+sqrt(s^2+4))/s)
 *
 * Each is stored as a piecewise cubic in t = log(s); outside the grid the
 * asymptotic expansions take over. Absolute table error is ~1e-10, checked
 * against the quadrature path in the test suite.
 *
 ******************************************************************************/

#ifndef VRING_KERNEL_TABLES_HPP
#define VRING_KERNEL_TABLES_HPP

#include <cmath>
#include <vector>

#include "vring/kernels.hpp"
#include "vring/types.hpp"

namespace vring {

class KernelTables {
public:
    /// Process-wide instance, built on first use (deterministic contents).
    static const KernelTables& instance();

    /// G1 and G2 at t = log(s).
    void g12(double t, double& g1, double& g2) const {
        if (t <= t_lo_ || t >= t_hi_) {
            g12_asymptotic(t, g1, g2);
            return;
        }
        const double u = (t - t_lo_) * inv_h_;
        const int j = static_cast<int>(u);
        const double* c = &c12_[8 * j];
        const double v = u - j;
        g1 = ((c[3] * v + c[2]) * v + c[1]) * v + c[0];
        g2 = ((c[7] * v + c[6]) * v + c[5]) * v + c[4];
    }

    /// D0 at t = log(s).
    double d0(double t) const {
        if (t <= t_lo_ || t >= t_hi_)
            return d0_asymptotic(t);
        const double u = (t - t_lo_) * inv_h_;
        const int j = static_cast<int>(u);
        const double* c = &c0_[4 * j];
        const double v = u - j;
        return ((c[3] * v + c[2]) * v + c[1]) * v + c[0];
    }

    // Convenience forms for tests and diagnostics.
    double i0(double s) const { return d0(std::log(s)) + detail::i0_log_form(s); }
    double i1(double s) const {
        double g1, g2;
        g12(std::log(s), g1, g2);
        return 1.0 / (s * s) + g1;
    }
    double i2(double s) const {
        double g1, g2;
        g12(std::log(s), g1, g2);
        return g2;
    }

private:
    KernelTables();
    static void g12_asymptotic(double t, double& g1, double& g2);
    static double d0_asymptotic(double t);

    double t_lo_, t_hi_, inv_h_;
    std::vector<double> c12_; // per interval: cubic coefficients of G1, G2
    std::vector<double> c0_;  // per interval: cubic coefficients of D0
};

namespace fast {

/// Velocity kernel of one source (at separation d = (dx, dy) = x - y, source
/// radius factor q = r_eps + y2) acting on a target with radius factor
/// p = r_eps + x2, with the scalar separation regularized to
/// rho^2 = |d|^2 + delta^2. For delta = 0 this is H(x,y); for delta > 0 it
/// equals K_delta + L_delta + R_delta of the three-way split with every
/// distance argument regularized the same way.
inline Vec2 h_regularized(const KernelTables& tab, double p, double q,
                          double dx, double dy, double delta2) {
    const double rho2 = dx * dx + dy * dy + delta2;
    const double A = p * q;
    double g1, g2;
    tab.g12(0.5 * std::log(rho2 / A), g1, g2);
    const double I1 = A / rho2 + g1;
    const double c = 1.0 / (kTwoPi * p * std::sqrt(A));
    return Vec2(c * (-dy * I1 + q * g2), c * (dx * I1));
}

/// Stream kernel with the same regularization: sqrt(A)/(2 pi) * I0(rho/sqrt(A)).
inline double s_regularized(const KernelTables& tab, double p, double q,
                            double dx, double dy, double delta2) {
    const double rho2 = dx * dx + dy * dy + delta2;
    const double A = p * q;
    const double s2 = rho2 / A;
    const double i0 = tab.d0(0.5 * std::log(s2)) +
                      std::log((2.0 + std::sqrt(s2 + 4.0)) / std::sqrt(s2));
    return std::sqrt(A) / kTwoPi * i0;
}

} // namespace fast

} // namespace vring

#endif
