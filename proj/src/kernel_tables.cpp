/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Construction of the kernel lookup tables.
 *
 ******************************************************************************/

#include "vring/kernel_tables.hpp"

namespace vring {

namespace {

constexpr double kTLo = -20.8;  // just below log(1e-9)
constexpr double kTHi = 11.6;   // just above log(1e5)
constexpr double kStep = 1.0 / 256.0;
constexpr double kBuildTol = 1e-11;

constexpr double kThreeHalfPi = 1.5 * kPi;
constexpr double kNineHalfPi = 4.5 * kPi;

double g1_node(double s) {
    if (s < detail::kSmallS)
        return 0.375 * std::log(s) + detail::kI1SmallConst;
    return detail::i1_minus_pole(s, kBuildTol);
}

double g2_node(double s) { return eval_I2(s, kBuildTol); }

double d0_node(double s) { return eval_I0(s, kBuildTol) - detail::i0_log_form(s); }

// Catmull-Rom cubic through four consecutive nodes, coefficients for u in [0,1].
void cubic_coeffs(double vm, double v0, double v1, double v2, double* c) {
    c[0] = v0;
    c[1] = 0.5 * (v1 - vm);
    c[2] = vm - 2.5 * v0 + 2.0 * v1 - 0.5 * v2;
    c[3] = -0.5 * vm + 1.5 * v0 - 1.5 * v1 + 0.5 * v2;
}

} // namespace

const KernelTables& KernelTables::instance() {
    static const KernelTables tables;
    return tables;
}

KernelTables::KernelTables() {
    const int m = static_cast<int>(std::ceil((kTHi - kTLo) / kStep));
    // node k sits at kTLo + (k-1)*h; one ghost node on each side feeds the
    // end intervals of the local cubic
    std::vector<double> g1(m + 3), g2(m + 3), d0(m + 3);
    for (int k = 0; k < m + 3; ++k) {
        const double s = std::exp(kTLo + (k - 1) * kStep);
        g1[k] = g1_node(s);
        g2[k] = g2_node(s);
        d0[k] = d0_node(s);
    }
    t_lo_ = kTLo;
    t_hi_ = kTLo + m * kStep;
    inv_h_ = 1.0 / kStep;
    c12_.resize(8 * m);
    c0_.resize(4 * m);
    for (int j = 0; j < m; ++j) {
        cubic_coeffs(g1[j], g1[j + 1], g1[j + 2], g1[j + 3], &c12_[8 * j]);
        cubic_coeffs(g2[j], g2[j + 1], g2[j + 2], g2[j + 3], &c12_[8 * j + 4]);
        cubic_coeffs(d0[j], d0[j + 1], d0[j + 2], d0[j + 3], &c0_[4 * j]);
    }
}

void KernelTables::g12_asymptotic(double t, double& g1, double& g2) {
    const double s = std::exp(t);
    if (t <= 0.0) {
        g1 = 0.375 * t + detail::kI1SmallConst;
        g2 = -0.5 * std::log(s / (1.0 + s)) + detail::kI2SmallConst - 0.5 * s;
        return;
    }
    const double s2 = s * s;
    const double s5 = s2 * s2 * s;
    g1 = -1.0 / s2 + kThreeHalfPi / s5;
    g2 = kPi / (s2 * s) - kNineHalfPi / s5;
}

double KernelTables::d0_asymptotic(double t) {
    if (t <= 0.0)
        return detail::kI0SmallConst;
    const double s = std::exp(t);
    return -2.0 / s + detail::kI0TailCubic / (s * s * s);
}

} // namespace vring
