#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vring/errors.hpp"
#include "vring/quadrature.hpp"
#include "vring/types.hpp"

using namespace vring;

TEST_CASE("adaptive Simpson on smooth integrands") {
    const double v = adaptive_simpson([](double t) { return std::sin(t); }, 0.0, kPi, 1e-12);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));

    const double w = adaptive_simpson([](double t) { return 4.0 / (1.0 + t * t); }, 0.0, 1.0, 1e-12);
    CHECK(w == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("adaptive Simpson resolves a sharp peak") {
    // int_0^1 eps/(eps^2 + t^2) dt = atan(1/eps)
    const double eps = 1e-4;
    const double v = adaptive_simpson(
        [eps](double t) { return eps / (eps * eps + t * t); }, 0.0, 1.0, 1e-10);
    CHECK(v == doctest::Approx(std::atan(1.0 / eps)).epsilon(1e-10));
}

TEST_CASE("failure carries the best estimate") {
    // a 1e-6-wide peak cannot be resolved at recursion depth 8
    const double eps = 1e-6;
    bool threw = false;
    try {
        adaptive_simpson([eps](double t) { return eps / (eps * eps + t * t); },
                         0.0, 1.0, 1e-12, 8);
    } catch (const QuadratureError& e) {
        threw = true;
        CHECK(std::isfinite(e.estimate));
        CHECK(e.estimate > 0.0);
        CHECK(e.error_bound > 1e-12);
    }
    CHECK(threw);
}

TEST_CASE("invalid tolerance") {
    CHECK_THROWS_AS(adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                    DomainError);
}

TEST_CASE("peaked helper matches the plain rule where both work") {
    const double s = 5e-3;
    auto f = [s](double t) {
        const double d = s * s + 2.0 * (1.0 - std::cos(t));
        return (1.0 - std::cos(t)) / (d * std::sqrt(d));
    };
    const double a = integrate_peaked_0_pi(f, s, 1e-11);
    const double b = adaptive_simpson(f, 0.0, kPi, 1e-11);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}
