/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Brute-force oracle used by the test suite only.
 *
 ******************************************************************************/

#include "oracle.hpp"

#include <cmath>

namespace oracle {

using vring::kPi;
using vring::kTwoPi;
using vring::Vec2;

double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
    const double h = (b - a) / panels;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < panels; i += 2)
        odd += f(a + i * h);
    for (int i = 2; i < panels; i += 2)
        even += f(a + i * h);
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

double I0(double s) {
    const double s2 = s * s;
    return simpson([s2](double t) {
        return std::cos(t) / std::sqrt(s2 + 2.0 * (1.0 - std::cos(t)));
    }, 0.0, kPi);
}

double I1(double s) {
    const double s2 = s * s;
    return simpson([s2](double t) {
        const double d = s2 + 2.0 * (1.0 - std::cos(t));
        return std::cos(t) / (d * std::sqrt(d));
    }, 0.0, kPi);
}

double I2(double s) {
    const double s2 = s * s;
    return simpson([s2](double t) {
        const double d = s2 + 2.0 * (1.0 - std::cos(t));
        return (1.0 - std::cos(t)) / (d * std::sqrt(d));
    }, 0.0, kPi);
}

Vec2 H(const Vec2& x, const Vec2& y, double r_eps) {
    const double p = r_eps + x.y();
    const double q = r_eps + y.y();
    const double d2 = (x - y).squaredNorm();
    const double A = p * q;
    const double h1 = simpson([&](double t) {
        const double d = d2 + 2.0 * A * (1.0 - std::cos(t));
        return q * (q - p * std::cos(t)) / (d * std::sqrt(d));
    }, 0.0, kPi) / kTwoPi;
    const double h2 = simpson([&](double t) {
        const double d = d2 + 2.0 * A * (1.0 - std::cos(t));
        return q * (x.x() - y.x()) * std::cos(t) / (d * std::sqrt(d));
    }, 0.0, kPi) / kTwoPi;
    return Vec2(h1, h2);
}

double S(const Vec2& x, const Vec2& y, double r_eps) {
    const double A = (r_eps + x.y()) * (r_eps + y.y());
    const double d2 = (x - y).squaredNorm();
    return A / kTwoPi * simpson([&](double t) {
        return std::cos(t) / std::sqrt(d2 + 2.0 * A * (1.0 - std::cos(t)));
    }, 0.0, kPi);
}

Vec2 remainder_six_terms(const Vec2& x, const Vec2& y, double r_eps) {
    const double p = r_eps + x.y();
    const double q = r_eps + y.y();
    const double A = p * q;
    const double sA = std::sqrt(A);
    const double r = (x - y).norm();
    const double a = r / sA;
    const double ratio = std::sqrt(q / p);
    const Vec2 dperp = vring::perp(x - y); // (d2, -d1)

    const double c1 = (1.0 + a) * (I1(a) - 1.0 / (a * a) - 0.25 * std::log(a / (1.0 + a)));
    const double c2 = (1.0 + a) * (I2(a) + 0.5 * std::log(a / (1.0 + a)));

    const Vec2 r1 = 1.0 / kTwoPi * (1.0 - ratio) * dperp / (r * r);
    const Vec2 r2 = 1.0 / (8.0 * kPi) * std::log((1.0 + a) / a) * dperp / (p * sA);
    const Vec2 r3 = 1.0 / (4.0 * kPi * p) * ratio *
                    (std::log(r / (1.0 + r)) - std::log(a / (1.0 + a))) * Vec2(1, 0);
    const Vec2 r4 = 1.0 / (4.0 * kPi * p) * (1.0 - ratio) *
                    std::log(r / (1.0 + r)) * Vec2(1, 0);
    const Vec2 r5 = -c1 / (kTwoPi * (1.0 + a)) * dperp / (p * sA);
    const Vec2 r6 = c2 / (kTwoPi * (1.0 + a) * p) * ratio * Vec2(1, 0);
    return r1 + r2 + r3 + r4 + r5 + r6;
}

} // namespace oracle
