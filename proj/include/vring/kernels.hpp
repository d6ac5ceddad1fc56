/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Axisymmetric velocity and stream kernels in the shifted frame.
 *
 * Working coordinates are x = (x1, x2) with x1 the axial and x2 the radial
 * offset from the reference radius r_eps, so the physical radius of a point
 * is r_eps + x2 and the physical half-plane is r_eps + x2 > 0.
 *
 * The building blocks are the three theta-integrals
 *
 *   I0(s) = int_0^pi cos(t) / [s^2 + 2(1-cos t)]^{1/2} dt
 *   I1(s) = int_0^pi cos(t) / [s^2 + 2(1-cos t)]^{3/2} dt
 *   I2(s) = int_0^pi (1-cos t) / [s^2 + 2(1-cos t)]^{3/2} dt
 *
 * from which the velocity kernel H = (H1,H2), the stream kernel S, the
 * planar kernel K, the axial drift kernel L and the bounded remainder
 * R = H - K - L are assembled.
 *
 ******************************************************************************/

#ifndef VRING_KERNELS_HPP
#define VRING_KERNELS_HPP

#include "vring/types.hpp"

namespace vring {

inline constexpr double kDefaultQuadTol = 1e-10;

/// Shared evaluation context: the shifted-frame radius r_eps and the default
/// quadrature tolerance. Kernel arguments must satisfy r_eps + x2 > 0.
struct KernelContext {
    double r_eps;
    double quad_tol;

    explicit KernelContext(double r_eps, double quad_tol = kDefaultQuadTol);
};

/// The three-way decomposition of H at one argument pair.
struct KernelSplit {
    Vec2 k_part;
    Vec2 l_part;
    Vec2 remainder;
};

// --- special integrals ---------------------------------------------------

double eval_I0(double s, double tol = kDefaultQuadTol);
double eval_I1(double s, double tol = kDefaultQuadTol);
double eval_I2(double s, double tol = kDefaultQuadTol);

// --- kernels --------------------------------------------------------------

/// Planar point-vortex kernel K(d) = (1/2pi) (-d2, d1) / |d|^2.
Vec2 eval_K(const Vec2& d);

/// Axial drift kernel L(x,y) = log((1+|x-y|)/|x-y|) / (4 pi (r_eps+x2)) * e1.
Vec2 eval_L(const Vec2& x, const Vec2& y, const KernelContext& ctx);

/// Full velocity kernel (H1, H2) by theta-quadrature of the defining
/// integrals. H2 vanishes identically when x1 == y1.
Vec2 eval_H(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol);
Vec2 eval_H(const Vec2& x, const Vec2& y, const KernelContext& ctx);

/// Stream (Green) kernel by theta-quadrature; symmetric in its arguments and
/// equal to sqrt(A)/(2 pi) * I0(|x-y|/sqrt(A)) with A = (r_eps+x2)(r_eps+y2).
double eval_S(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol);
double eval_S(const Vec2& x, const Vec2& y, const KernelContext& ctx);

/// Remainder R(x,y) = H(x,y) - K(x-y) - L(x,y); bounded where K and L blow up.
Vec2 eval_remainder(const Vec2& x, const Vec2& y, const KernelContext& ctx, double tol);
Vec2 eval_remainder(const Vec2& x, const Vec2& y, const KernelContext& ctx);

/// All three parts of the decomposition at once.
KernelSplit kernel_split(const Vec2& x, const Vec2& y, const KernelContext& ctx,
                         double tol);

namespace detail {

// I1(s) - 1/s^2, evaluated as a single stable quadrature (no cancellation of
// the 1/s^2 pole). Used internally and by the fast-table builder.
double i1_minus_pole(double s, double tol);

// Small-s and large-s expansion constants, shared with the fast tables.
inline constexpr double kI1SmallConst = -0.4672905773;   // lim I1 - 1/s^2 - (3/8) log s
inline constexpr double kI2SmallConst = 0.53972077083991796; // (3/2) log 2 - 1/2
inline constexpr double kI0SmallConst = -1.3068528194400547; // log 2 - 2
inline constexpr double kI0TailCubic = 2.9041295900518731;  // pi/2 + 4/3

inline constexpr double kSmallS = 1e-6;
inline constexpr double kLargeS = 1e6;

// log((2 + sqrt(s^2+4))/s), the logarithmic profile of I0.
double i0_log_form(double s);

} // namespace detail

} // namespace vring

#endif
