/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Kernel evaluations by adaptive theta-quadrature.
 *
 ******************************************************************************/

#include "vring/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vring/errors.hpp"
#include "vring/quadrature.hpp"

namespace vring {

KernelContext::KernelContext(double r_eps_, double quad_tol_)
    : r_eps(r_eps_), quad_tol(quad_tol_) {
    if (!(r_eps > 0.0))
        throw DomainError("KernelContext: r_eps must be positive");
    if (!(quad_tol > 0.0))
        throw DomainError("KernelContext: quad_tol must be positive");
}

namespace detail {

double i0_log_form(double s) {
    return std::log((2.0 + std::sqrt(s * s + 4.0)) / s);
}

namespace {

// theta^2 - 4 sin^2(theta/2), the defect between the exact denominator and
// its parabolic approximation. Series below 0.1 to avoid cancellation.
double theta_defect(double th) {
    if (th < 0.1) {
        const double t2 = th * th;
        return t2 * t2 * (1.0 / 12.0 - t2 / 360.0 + t2 * t2 / 20160.0);
    }
    const double sh = std::sin(0.5 * th);
    return th * th - 4.0 * sh * sh;
}

} // namespace

double i1_minus_pole(double s, double tol) {
    // I1 carries a 1/s^2 pole from the theta ~ 0 peak. Subtracting the pole
    // inside the integrand keeps every evaluation at its natural scale:
    //
    //   I1(s) - 1/s^2 = int_0^pi { cos(t)/D^{3/2} - 1/u^{3/2} } dt - tail(s),
    //
    // with u = s^2 + t^2, D = s^2 + 4 sin^2(t/2) = u - q(t), and
    // tail(s) = int_pi^inf du-integrand in closed form.
    const double s2 = s * s;
    auto f = [s2](double th) {
        const double sh = std::sin(0.5 * th);
        const double D = s2 + 4.0 * sh * sh;
        const double u = s2 + th * th;
        const double q = theta_defect(th);
        // cos(t) u^{3/2} - D^{3/2} = u^{3/2} [ (cos t - 1) + (1 - (1 - q/u)^{3/2}) ]
        const double num = -2.0 * sh * sh - std::expm1(1.5 * std::log1p(-q / u));
        return num / (D * std::sqrt(D));
    };
    const double body = integrate_peaked_0_pi(f, s, tol);
    const double rp = std::sqrt(s2 + kPi * kPi);
    const double tail = 1.0 / (rp * (rp + kPi));
    return body - tail;
}

} // namespace detail

double eval_I0(double s, double tol) {
    if (!(s > 0.0))
        throw DomainError("eval_I0: s must be positive");
    if (s < detail::kSmallS)
        return detail::i0_log_form(s) + detail::kI0SmallConst;
    if (s > detail::kLargeS) {
        // log form alone stalls at O(1/s); two correction terms restore
        // absolute accuracy far below the default tolerance.
        return detail::i0_log_form(s) - 2.0 / s + detail::kI0TailCubic / (s * s * s);
    }
    const double s2 = s * s;
    auto f = [s2](double th) {
        const double sh = std::sin(0.5 * th);
        return std::cos(th) / std::sqrt(s2 + 4.0 * sh * sh);
    };
    return integrate_peaked_0_pi(f, s, tol);
}

double eval_I1(double s, double tol) {
    if (!(s > 0.0))
        throw DomainError("eval_I1: s must be positive");
    if (s < detail::kSmallS)
        return 1.0 / (s * s) + 0.375 * std::log(s) + detail::kI1SmallConst;
    if (s > detail::kLargeS)
        return 0.0; // I1 ~ 3 pi / (2 s^5)
    if (s < 2.0)
        return 1.0 / (s * s) + detail::i1_minus_pole(s, tol);
    const double s2 = s * s;
    auto f = [s2](double th) {
        const double sh = std::sin(0.5 * th);
        const double D = s2 + 4.0 * sh * sh;
        return std::cos(th) / (D * std::sqrt(D));
    };
    return integrate_peaked_0_pi(f, s, tol);
}

double eval_I2(double s, double tol) {
    if (!(s > 0.0))
        throw DomainError("eval_I2: s must be positive");
    if (s < detail::kSmallS)
        return -0.5 * std::log(s / (1.0 + s)) + detail::kI2SmallConst - 0.5 * s;
    if (s > detail::kLargeS)
        return 0.0; // I2 ~ pi / s^3
    const double s2 = s * s;
    auto f = [s2](double th) {
        const double sh = std::sin(0.5 * th);
        const double D = s2 + 4.0 * sh * sh;
        return 2.0 * sh * sh / (D * std::sqrt(D));
    };
    return integrate_peaked_0_pi(f, s, tol);
}

Vec2 eval_K(const Vec2& d) {
    const double r2 = d.squaredNorm();
    if (r2 == 0.0)
        throw SingularityError("eval_K: zero separation");
    return Vec2(-d.y(), d.x()) / (kTwoPi * r2);
}

Vec2 eval_L(const Vec2& x, const Vec2& y, const KernelContext& ctx) {
    const double p = ctx.r_eps + x.y();
    if (!(p > 0.0))
        throw DomainError("eval_L: r_eps + x2 must be positive");
    const double r = (x - y).norm();
    if (r == 0.0)
        throw SingularityError("eval_L: coincident points");
    return Vec2(std::log1p(1.0 / r) / (4.0 * kPi * p), 0.0);
}

namespace {

void check_h_domain(const Vec2& x, const Vec2& y, const KernelContext& ctx,
                    const char* who) {
    if (!(ctx.r_eps + x.y() > 0.0) || !(ctx.r_eps + y.y() > 0.0))
        throw DomainError(std::string(who) + ": point outside the physical half-plane");
    if (x == y)
        throw SingularityError(std::string(who) + ": coincident points");
}

} // namespace

Vec2 eval_H(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol) {
    check_h_domain(x, y, ctx, "eval_H");
    const double p = ctx.r_eps + x.y();
    const double q = ctx.r_eps + y.y();
    const double d2 = (x - y).squaredNorm();
    const double A = p * q;
    const double s_eff = std::sqrt(d2 / A);

    auto h1 = [&](double th) {
        const double sh = std::sin(0.5 * th);
        const double D = d2 + 4.0 * A * sh * sh;
        return q * (q - p * std::cos(th)) / (D * std::sqrt(D) * kTwoPi);
    };
    const double H1 = integrate_peaked_0_pi(h1, s_eff, tol);

    const double dx1 = x.x() - y.x();
    if (dx1 == 0.0)
        return Vec2(H1, 0.0); // the H2 integrand carries the (x1-y1) prefactor

    auto h2 = [&](double th) {
        const double sh = std::sin(0.5 * th);
        const double D = d2 + 4.0 * A * sh * sh;
        return q * std::cos(th) / (D * std::sqrt(D) * kTwoPi);
    };
    // the (x1-y1) prefactor sits outside the integral, so the integral itself
    // only needs tol / |x1-y1|
    const double tol2 = tol / std::fabs(dx1);
    const double H2 = dx1 * integrate_peaked_0_pi(h2, s_eff, tol2);
    return Vec2(H1, H2);
}

Vec2 eval_H(const Vec2& x, const Vec2& y, const KernelContext& ctx) {
    return eval_H(x, y, ctx, ctx.quad_tol);
}

double eval_S(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol) {
    check_h_domain(x, y, ctx, "eval_S");
    const double A = (ctx.r_eps + x.y()) * (ctx.r_eps + y.y());
    const double d2 = (x - y).squaredNorm();
    const double s_eff = std::sqrt(d2 / A);
    auto f = [&](double th) {
        const double sh = std::sin(0.5 * th);
        return A * std::cos(th) / (std::sqrt(d2 + 4.0 * A * sh * sh) * kTwoPi);
    };
    return integrate_peaked_0_pi(f, s_eff, tol);
}

double eval_S(const Vec2& x, const Vec2& y, const KernelContext& ctx) {
    return eval_S(x, y, ctx, ctx.quad_tol);
}

Vec2 eval_remainder(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol) {
    check_h_domain(x, y, ctx, "eval_remainder");
    return eval_H(x, y, ctx, tol) - eval_K(x - y) - eval_L(x, y, ctx);
}

Vec2 eval_remainder(const Vec2& x, const Vec2& y, const KernelContext& ctx) {
    return eval_remainder(x, y, ctx, ctx.quad_tol);
}

KernelSplit kernel_split(const Vec2& x, const Vec2& y, const KernelContext& ctx,
                         double tol) {
    KernelSplit split;
    split.k_part = eval_K(x - y);
    split.l_part = eval_L(x, y, ctx);
    split.remainder = eval_H(x, y, ctx, tol) - split.k_part - split.l_part;
    return split;
}

} // namespace vring
