/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Adaptive quadrature used by the kernel evaluations.
 *
 ******************************************************************************/

#ifndef VRING_QUADRATURE_HPP
#define VRING_QUADRATURE_HPP

#include <functional>

namespace vring {

/// Adaptive Simpson rule on [a,b]: recursive bisection with the embedded
/// coarse/fine error estimate |S2-S1|/15. A panel is also accepted once the
/// estimate falls below a few ulps of the running value, so that requests
/// tighter than double precision do not recurse forever. Throws
/// QuadratureError (with the best estimate) if the tolerance cannot be met.
double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol, int max_depth = 48);

/// Integrate f over [0, pi] when the integrand has an integrable peak of
/// width s at theta = 0 (denominators of the form [s^2 + 2(1-cos)]^p).
/// For s < 1e-2 the range is split at theta = s and the substitution
/// theta = s*sinh(u) is applied on the near cell; otherwise plain adaptive
/// Simpson is used.
double integrate_peaked_0_pi(const std::function<double(double)>& f,
                             double s, double tol);

} // namespace vring

#endif
