#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vring/kernel_tables.hpp"
#include "vring/kernels.hpp"

using namespace vring;

TEST_CASE("tabulated integrals track the quadrature path") {
    const auto& tab = KernelTables::instance();
    for (int k = -32; k <= 16; ++k) {
        const double s = std::pow(10.0, 0.25 * k); // 1e-8 .. 1e4
        CAPTURE(s);
        const double i0q = eval_I0(s, 1e-12);
        const double i2q = eval_I2(s, 1e-12);
        CHECK(std::fabs(tab.i0(s) - i0q) < 1e-9 * std::max(1.0, std::fabs(i0q)));
        CHECK(std::fabs(tab.i2(s) - i2q) < 1e-9 * std::max(1.0, std::fabs(i2q)));
        // compare I1 through its smooth part: the raw values reach 1e16
        double g1, g2;
        tab.g12(std::log(s), g1, g2);
        const double g1q = s < detail::kSmallS
                               ? 0.375 * std::log(s) + detail::kI1SmallConst
                               : detail::i1_minus_pole(s, 1e-12);
        CHECK(std::fabs(g1 - g1q) < 1e-9 * std::max(1.0, std::fabs(g1q)));
    }
}

TEST_CASE("tabulated integrals beyond the grid use the asymptotics") {
    const auto& tab = KernelTables::instance();
    CHECK(tab.i0(1e7) == doctest::Approx(eval_I0(1e7)).epsilon(1e-10));
    CHECK(std::fabs(tab.i2(3e6)) < 1e-10);
    double g1, g2;
    tab.g12(std::log(1e-11), g1, g2);
    CHECK(g1 == doctest::Approx(0.375 * std::log(1e-11) + detail::kI1SmallConst)
                    .epsilon(1e-10));
}

TEST_CASE("fast pair kernel reproduces eval_H") {
    const auto& tab = KernelTables::instance();
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    std::uniform_real_distribution<double> reps(4.0, 30.0);
    for (int i = 0; i < 300; ++i) {
        const Vec2 x(coord(gen), coord(gen));
        const Vec2 y(coord(gen), coord(gen));
        const double re = reps(gen);
        if ((x - y).norm() < 1e-3)
            continue;
        const KernelContext ctx(re);
        const Vec2 slow = eval_H(x, y, ctx, 1e-12);
        const Vec2 fastv = fast::h_regularized(tab, re + x.y(), re + y.y(),
                                               x.x() - y.x(), x.y() - y.y(), 0.0);
        CAPTURE(x.x());
        CAPTURE(y.x());
        CAPTURE(re);
        CHECK(std::fabs(slow.x() - fastv.x()) < 1e-8 * std::max(1.0, slow.norm()));
        CHECK(std::fabs(slow.y() - fastv.y()) < 1e-8 * std::max(1.0, slow.norm()));
    }
}

TEST_CASE("fast stream kernel reproduces eval_S") {
    const auto& tab = KernelTables::instance();
    std::mt19937 gen(29);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Vec2 x(coord(gen), coord(gen));
        const Vec2 y(coord(gen), coord(gen));
        if ((x - y).norm() < 1e-3)
            continue;
        const double re = 12.0;
        const KernelContext ctx(re);
        const double slow = eval_S(x, y, ctx, 1e-12);
        const double fastv = fast::s_regularized(tab, re + x.y(), re + y.y(),
                                                 x.x() - y.x(), x.y() - y.y(), 0.0);
        CHECK(std::fabs(slow - fastv) < 1e-8 * std::max(1.0, std::fabs(slow)));
    }
}

TEST_CASE("regularized pair kernel matches the quadrature route at rho") {
    // h_regularized with core delta equals the I1/I2 assembly evaluated at the
    // softened similarity variable a = sqrt(|d|^2 + delta^2) / sqrt(A); check
    // against the quadrature-backed integrals.
    const auto& tab = KernelTables::instance();
    const double re = 18.0;
    const Vec2 x(0.12, -0.07), y(-0.05, 0.2);
    for (double delta : {0.0, 1e-3, 0.05, 0.3}) {
        const double p = re + x.y(), q = re + y.y();
        const double A = p * q;
        const Vec2 d = x - y;
        const double rho2 = d.squaredNorm() + delta * delta;
        const double a = std::sqrt(rho2 / A);
        const double i1 = eval_I1(a, 1e-12);
        const double i2 = eval_I2(a, 1e-12);
        const double c = 1.0 / (kTwoPi * p * std::sqrt(A));
        const Vec2 want(c * (-d.y() * i1 + q * i2), c * (d.x() * i1));
        const Vec2 got = fast::h_regularized(tab, p, q, d.x(), d.y(), delta * delta);
        CHECK(std::fabs(got.x() - want.x()) < 1e-9 * std::max(1.0, want.norm()));
        CHECK(std::fabs(got.y() - want.y()) < 1e-9 * std::max(1.0, want.norm()));
    }

    // and the split interpretation at delta > 0: subtracting the softened K
    // and L leaves a remainder of the same small size as the exact R
    const double delta = 0.2;
    const Vec2 d = x - y;
    const double rho2 = d.squaredNorm() + delta * delta;
    const Vec2 fastv = fast::h_regularized(tab, re + x.y(), re + y.y(), d.x(), d.y(),
                                           delta * delta);
    const Vec2 kd = Vec2(-d.y(), d.x()) / (kTwoPi * rho2);
    const Vec2 ld(std::log1p(1.0 / std::sqrt(rho2)) / (4.0 * kPi * (re + x.y())), 0.0);
    CHECK((fastv - kd - ld).norm() < 0.05);
}
