#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vring/errors.hpp"
#include "vring/leapfrog.hpp"

using namespace vring;

namespace {

const TwoRingParams kP{2.0, 1.0, 1.0}; // a = 3, x* = (0,6), C* = (6/e)^2

Trajectory orbit_from(const TwoRingParams& p, const Vec2& x0, double T, double dt) {
    ReducedState s0;
    auto [z1, z2] = inverse_two_ring(x0, Vec2::Zero(), p);
    s0.centers = {z1, z2};
    s0.intensities = {p.a1, p.a2};
    s0.alpha = p.alpha;
    return integrate_reduced(s0, T, dt);
}

double radicand(const TwoRingParams& p, double c_e, double x2) {
    return c_e * std::exp(x2 / (p.alpha * p.a())) - x2 * x2;
}

} // namespace

TEST_CASE("params: validation and derived quantities") {
    CHECK_THROWS_AS(TwoRingParams(1.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(TwoRingParams(2.0, 1.0, 0.0), DomainError);
    CHECK(kP.a() == doctest::Approx(3.0));
    CHECK(kP.xstar() == Vec2(0.0, 6.0));
    CHECK(kP.cstar() == doctest::Approx(36.0 / std::exp(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(TwoRingParams(1.0, 1.0, 1.0).a(), DomainError);
    const double c = kP.level_constant(-0.3);
    CHECK(kP.level_energy(c) == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("reduction: examples and exact round trip") {
    const Vec2 q(0.4, -1.1);
    auto [x0, y0] = reduce_two_ring(q, q, kP);
    CHECK(x0 == Vec2(0.0, 0.0));
    CHECK((y0 - q).norm() < 1e-15);

    const TwoRingParams eq(1.0, 1.0, 1.0);
    auto [xe, ye] = reduce_two_ring(Vec2(1.0, 0.0), Vec2(0.0, 1.0), eq);
    CHECK(ye == Vec2(0.5, 0.5)); // equal intensities: barycenter = midpoint
    CHECK(xe == Vec2(1.0, -1.0));

    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Vec2 z1(u(gen), u(gen)), z2(u(gen), u(gen));
        auto [x, y] = reduce_two_ring(z1, z2, kP);
        auto [w1, w2] = inverse_two_ring(x, y, kP);
        CHECK((w1 - z1).norm() < 1e-14);
        CHECK((w2 - z2).norm() < 1e-14);
    }
}

TEST_CASE("hamiltonian: stationary point, critical level, radial symmetry") {
    const Vec2 xs = kP.xstar();
    const double h = 1e-6;
    const double gx = (hamiltonian(xs + Vec2(h, 0), kP) - hamiltonian(xs - Vec2(h, 0), kP)) / (2 * h);
    const double gy = (hamiltonian(xs + Vec2(0, h), kP) - hamiltonian(xs - Vec2(0, h), kP)) / (2 * h);
    CHECK(std::hypot(gx, gy) < 1e-6);

    CHECK(std::exp(-4.0 * kPi * hamiltonian(xs, kP) / kP.sum()) ==
          doctest::Approx(kP.cstar()).epsilon(1e-13));

    const TwoRingParams eq(1.0, 1.0, 1.0);
    CHECK(hamiltonian(Vec2(0.3, 0.4), eq) ==
          doctest::Approx(hamiltonian(Vec2(0.5, 0.0), eq)).epsilon(1e-15));
    CHECK_THROWS_AS(hamiltonian(Vec2(0.0, 0.0), kP), SingularityError);
}

TEST_CASE("level_roots: branches, ordering, defining equation") {
    const double cs = kP.cstar();
    SUBCASE("periodic branch") {
        const OrbitLevel lvl = level_roots(0.5 * cs, kP, 1e-13);
        CHECK(lvl.periodic);
        CHECK(lvl.eta1 < 0.0);
        CHECK(lvl.eta2 > 0.0);
        CHECK(lvl.eta2 < 6.0);
        CHECK(lvl.eta3 > 6.0);
        for (double eta : {lvl.eta1, lvl.eta2, lvl.eta3})
            CHECK(std::fabs(radicand(kP, 0.5 * cs, eta)) < 1e-10);
    }
    SUBCASE("tangent level") {
        const OrbitLevel lvl = level_roots(cs, kP, 1e-13);
        CHECK_FALSE(lvl.periodic);
        CHECK(lvl.eta2 == doctest::Approx(6.0).epsilon(1e-10));
        CHECK(lvl.eta3 == doctest::Approx(6.0).epsilon(1e-10));
    }
    SUBCASE("deep level approaches +-sqrt(C_E)") {
        const double ce = 1e-6 * cs;
        const OrbitLevel lvl = level_roots(ce, kP, 1e-14);
        CHECK(lvl.eta1 == doctest::Approx(-std::sqrt(ce)).epsilon(0.01));
        CHECK(lvl.eta2 == doctest::Approx(std::sqrt(ce)).epsilon(0.01));
    }
    SUBCASE("one-root branch") {
        const OrbitLevel lvl = level_roots(2.0 * cs, kP, 1e-13);
        CHECK_FALSE(lvl.periodic);
        CHECK(lvl.eta_bar < 0.0);
        CHECK(std::fabs(radicand(kP, 2.0 * cs, lvl.eta_bar)) < 1e-9);
        CHECK(std::isnan(lvl.eta2));
    }
    SUBCASE("classification sweep") {
        for (double f : {0.05, 0.3, 0.9, 0.999, 1.001, 1.5, 4.0})
            CHECK(level_roots(f * cs, kP).periodic == (f < 1.0));
    }
    CHECK_THROWS_AS(level_roots(0.0, kP), DomainError);
}

TEST_CASE("period: small-level asymptote and planar limit") {
    const double cs = kP.cstar();
    double prev_gap = 1e9;
    for (double f : {0.1, 0.01, 0.001}) {
        const double ce = f * cs;
        const double ratio = period(ce, kP, 1e-11) * kP.sum() / (4.0 * kPi * kPi * ce);
        const double gap = std::fabs(ratio - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.05);

    const double E = 0.0; // R_E = 1
    double prev = 1e9;
    for (double alpha : {10.0, 100.0, 1000.0}) {
        const TwoRingParams p(2.0, 1.0, alpha);
        const double te = period(p.level_constant(E), p, 1e-11);
        const double gap = std::fabs(te / planar_period(E, p) - 1.0);
        CHECK(gap < prev);
        prev = gap;
    }

    CHECK_THROWS_AS(period(2.0 * cs, kP), NonPeriodicLevelError);
}

TEST_CASE("period: continuity along the periodic branch") {
    const double cs = kP.cstar();
    double prev = 0.0;
    double c = 0.15 * cs;
    while (c < 0.6 * cs) {
        const double t = period(c, kP, 1e-10);
        if (prev > 0.0) {
            CHECK(t > prev);                    // monotone on this stretch
            CHECK((t - prev) / prev < 0.02);    // no jumps at 1% level spacing
        }
        prev = t;
        c *= 1.01;
    }
}

TEST_CASE("period matches the first-return time of the integrated orbit") {
    const double ce = 0.5 * kP.cstar();
    const OrbitLevel lvl = level_roots(ce, kP);
    const double te = period(ce, kP, 1e-11);
    const Trajectory traj = orbit_from(kP, Vec2(0.0, lvl.eta2), 1.2 * te, te / 32768.0);
    const auto hits = detect_overtakings(traj, kP);
    // crossings at t = 0 (start sits on the section), T/2 and T
    REQUIRE(hits.size() >= 3);
    CHECK(hits[0] < 1e-9 * te);
    CHECK(hits[2] == doctest::Approx(te).epsilon(1e-3));
}

TEST_CASE("overtakings: circular orbit, parity, quiescent trajectory") {
    // equal intensities: x moves on a circle, two section crossings per turn
    const TwoRingParams eq(1.0, 1.0, 1.0);
    const double d = 1.0;
    const double period_circ = 2.0 * kPi * kPi * d * d / 1.0; // 2 pi d / |xdot|
    ReducedState s0;
    s0.centers = {Vec2(d / 2, 0.0), Vec2(-d / 2, 0.0)}; // x = (d, 0), off the section
    s0.intensities = {1.0, 1.0};
    s0.alpha = 1.0;
    for (int k = 1; k <= 3; ++k) {
        const Trajectory t = integrate_reduced(s0, k * period_circ, 1e-3);
        const auto hits = detect_overtakings(t, eq);
        CHECK(hits.size() == static_cast<size_t>(2 * k));
        CHECK(hits.size() % 2 == 0);
    }

    // synthetic trajectory with x1 > 0 throughout: no crossings
    Trajectory flat;
    for (int k = 0; k <= 100; ++k) {
        flat.times.push_back(0.01 * k);
        ReducedState st;
        st.centers = {Vec2(1.0 + 0.1 * std::sin(0.3 * k), 0.0), Vec2(0.0, 0.0)};
        st.intensities = {2.0, 1.0};
        st.alpha = 1.0;
        flat.states.push_back(st);
    }
    CHECK(detect_overtakings(flat, kP).empty());
}

TEST_CASE("alpha_threshold: certificate holds and scales sensibly") {
    const double rho = 0.3, E = -0.3;
    const double re = std::exp(-2.0 * kPi * E / 3.0);
    REQUIRE(re > 4.0 * rho);

    const AlphaThreshold th1 = alpha_threshold(rho, E, 1, 2.0, 1.0);
    // independent re-check of the three certificate conditions
    const TwoRingParams p(2.0, 1.0, th1.alpha);
    const double ce = p.level_constant(E);
    CHECK(ce < p.cstar());
    const double te = period(ce, p);
    const double tpl = planar_period(E, p);
    CHECK(1.0 * te < 2.0 * tpl);
    const OrbitLevel lvl = level_roots(ce, p);
    const Trajectory traj = orbit_from(p, Vec2(0.0, lvl.eta2), 2.0 * tpl, te / 4096.0);
    CHECK(traj.min_separation >= 4.0 * rho);
    CHECK(th1.certificate.min_separation == doctest::Approx(traj.min_separation).epsilon(1e-6));

    const AlphaThreshold th3 = alpha_threshold(rho, E, 3, 2.0, 1.0);
    CHECK(th1.alpha <= th3.alpha * (1.0 + 1e-9));

    // above the threshold the orbit only gets rounder
    double prev = th3.certificate.min_separation;
    for (double f : {2.0, 4.0}) {
        const TwoRingParams pf(2.0, 1.0, f * th3.alpha);
        const OrbitLevel l2 = level_roots(pf.level_constant(E), pf);
        const Trajectory t2 = orbit_from(pf, Vec2(0.0, l2.eta2),
                                         4.0 * planar_period(E, pf),
                                         period(pf.level_constant(E), pf) / 4096.0);
        CHECK(t2.min_separation >= prev - 1e-9);
        prev = t2.min_separation;
    }

    CHECK_THROWS_AS(alpha_threshold(1.0, 0.0, 1, 2.0, 1.0), DomainError); // R_E = 1 < 4
}

TEST_CASE("phase_portrait: component structure and level consistency") {
    const double cs = kP.cstar();
    SUBCASE("periodic level: closed curve around the origin, not around x*") {
        const auto curves = phase_portrait(kP, {0.5 * cs}, 128);
        REQUIRE(curves.size() == 2);
        REQUIRE(curves[0].closed);
        const auto& pts = curves[0].points;
        CHECK((pts.front() - pts.back()).norm() == 0.0);
        // turning points sit on the section
        CHECK(std::fabs(pts.front().x()) < 1e-5);

        // winding number about the origin is 1; about x* it is 0
        auto winding = [&](const Vec2& c) {
            double acc = 0.0;
            for (size_t k = 0; k + 1 < pts.size(); ++k) {
                const Vec2 a = pts[k] - c, b = pts[k + 1] - c;
                acc += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
            }
            return acc / kTwoPi;
        };
        CHECK(std::fabs(std::fabs(winding(Vec2(0.0, 0.0))) - 1.0) < 1e-6);
        CHECK(std::fabs(winding(kP.xstar())) < 1e-6);

        // every traced point lies on the level
        for (size_t k = 0; k < pts.size(); k += 7) {
            if (pts[k].norm() < 1e-9)
                continue;
            const double c_of_x = std::exp(-4.0 * kPi * hamiltonian(pts[k], kP) / kP.sum());
            CHECK(std::fabs(c_of_x - 0.5 * cs) < 1e-8 * cs);
        }
    }
    SUBCASE("non-periodic level: no closed component") {
        const auto curves = phase_portrait(kP, {1.5 * cs}, 64);
        REQUIRE(curves.size() == 1);
        CHECK_FALSE(curves[0].closed);
    }
    SUBCASE("three levels give 4-6 components") {
        const auto curves = phase_portrait(kP, {0.3 * cs, 0.7 * cs, 1.4 * cs}, 64);
        CHECK(curves.size() >= 4);
        CHECK(curves.size() <= 6);
    }
}
