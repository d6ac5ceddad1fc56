/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Adaptive Simpson quadrature with near-singular substitution.
 *
 ******************************************************************************/

#include "vring/quadrature.hpp"

#include <cmath>
#include <limits>

#include "vring/errors.hpp"
#include "vring/types.hpp"

namespace vring {

namespace {

struct PanelState {
    double scale = 0.0;   // magnitude of the whole integral, for the ulp floor
    double deficit = 0.0; // worst unmet local error bound
    bool failed = false;
};

double simpson_recurse(const std::function<double(double)>& f,
                       double a, double m, double b,
                       double fa, double fm, double fb,
                       double whole, double tol, int depth, PanelState& st) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double s2 = left + right;
    const double err = (s2 - whole) / 15.0;
    if (!std::isfinite(err)) {
        // refining around a non-finite value cannot help; give up on this panel
        st.failed = true;
        st.deficit = std::numeric_limits<double>::infinity();
        return s2;
    }
    // roundoff floor: neither a panel nor the total can be resolved below a
    // few ulps of its own magnitude
    const double floor = 8e-16 * (std::fabs(s2) + std::fabs(whole)) + 1e-15 * st.scale;
    if (std::fabs(err) <= tol || std::fabs(err) <= floor)
        return s2 + err;
    if (depth <= 0) {
        st.failed = true;
        st.deficit += std::fabs(err);
        return s2 + err;
    }
    return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, st) +
           simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, st);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol, int max_depth) {
    if (!(tol > 0.0))
        throw DomainError("adaptive_simpson: tolerance must be positive");
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    PanelState st;
    st.scale = std::fabs(whole);
    const double value =
        simpson_recurse(f, a, m, b, fa, fm, fb, whole, tol, max_depth, st);
    if (st.failed && st.deficit > tol)
        throw QuadratureError("adaptive_simpson: tolerance not met after max refinement",
                              value, st.deficit);
    return value;
}

double integrate_peaked_0_pi(const std::function<double(double)>& f,
                             double s, double tol) {
    if (!(s > 0.0) || s >= 1e-2 || s >= kPi)
        return adaptive_simpson(f, 0.0, kPi, tol);
    // Split at theta = s; theta = s*sinh(u) flattens the 1/(s^2+theta^2)^p
    // peak on the near cell and turns the power-law decay of the far cell
    // into a mild exponential, so both converge in a few dozen panels.
    auto g = [&](double u) {
        const double ch = std::cosh(u);
        return f(s * std::sinh(u)) * s * ch;
    };
    const double u_split = std::asinh(1.0);
    const double u_max = std::asinh(kPi / s);
    const double near = adaptive_simpson(g, 0.0, u_split, 0.5 * tol);
    const double far = adaptive_simpson(g, u_split, u_max, 0.5 * tol);
    return near + far;
}

} // namespace vring
