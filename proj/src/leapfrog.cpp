/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Two-ring level-set geometry, periods and the leapfrogging machinery.
 *
 ******************************************************************************/

#include "vring/leapfrog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vring/errors.hpp"
#include "vring/quadrature.hpp"

namespace vring {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

TwoRingParams::TwoRingParams(double a1_, double a2_, double alpha_)
    : a1(a1_), a2(a2_), alpha(alpha_) {
    if (a1 + a2 == 0.0)
        throw DomainError("TwoRingParams: a1 + a2 must be nonzero (dipole case)");
    if (!(alpha > 0.0))
        throw DomainError("TwoRingParams: alpha must be positive");
}

double TwoRingParams::a() const {
    if (a1 == a2)
        throw DomainError("TwoRingParams: a = (a1+a2)/(a1-a2) undefined for a1 == a2");
    return (a1 + a2) / (a1 - a2);
}

Vec2 TwoRingParams::xstar() const { return Vec2(0.0, 2.0 * alpha * a()); }

double TwoRingParams::cstar() const {
    const double aa = alpha * a();
    if (!(aa > 0.0))
        throw DomainError("TwoRingParams: level-set machinery requires alpha*a > 0");
    const double v = 2.0 * aa / std::exp(1.0);
    return v * v;
}

double TwoRingParams::level_constant(double E) const {
    return std::exp(-4.0 * kPi * E / sum());
}

double TwoRingParams::level_energy(double c_e) const {
    if (!(c_e > 0.0))
        throw DomainError("TwoRingParams: level constant must be positive");
    return -sum() * std::log(c_e) / (4.0 * kPi);
}

std::pair<Vec2, Vec2> reduce_two_ring(const Vec2& z1, const Vec2& z2,
                                      const TwoRingParams& p) {
    return {z1 - z2, (p.a1 * z1 + p.a2 * z2) / p.sum()};
}

std::pair<Vec2, Vec2> inverse_two_ring(const Vec2& x, const Vec2& y,
                                       const TwoRingParams& p) {
    return {y + p.a2 / p.sum() * x, y - p.a1 / p.sum() * x};
}

double hamiltonian(const Vec2& x, const TwoRingParams& p) {
    const double r2 = x.squaredNorm();
    if (r2 == 0.0)
        throw SingularityError("hamiltonian: x = 0");
    return -p.sum() / (4.0 * kPi) * std::log(r2) +
           (p.a1 - p.a2) / (4.0 * kPi * p.alpha) * x.y();
}

namespace {

// Safeguarded bisection/secant search for g on a sign-changing bracket.
// A bisection is forced on every other step, so one-sided secant stalls
// cannot pin a bracket end.
double polish_root(const std::function<double(double)>& g, double lo, double hi,
                   double glo, double ghi, double tol) {
    for (int it = 0; it < 200; ++it) {
        if (glo == 0.0)
            return lo;
        if (ghi == 0.0)
            return hi;
        if (hi - lo <= tol * std::max(1.0, std::fabs(lo) + std::fabs(hi)))
            break;
        double mid = 0.5 * (lo + hi);
        if (it % 2 == 0 && ghi != glo) {
            const double sec = hi - ghi * (hi - lo) / (ghi - glo);
            if (sec > lo && sec < hi)
                mid = sec;
        }
        const double gm = g(mid);
        if (gm == 0.0)
            return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

OrbitLevel level_roots(double c_e, const TwoRingParams& p, double tol) {
    if (!(c_e > 0.0))
        throw DomainError("level_roots: level constant must be positive");
    const double aa = p.alpha * p.a();
    if (!(aa > 0.0))
        throw DomainError("level_roots: requires alpha*a > 0");
    const double cstar = p.cstar();
    const double x2s = 2.0 * aa;
    auto g = [&](double eta) { return c_e * std::exp(eta / aa) - eta * eta; };

    OrbitLevel lvl;
    lvl.c_e = c_e;
    lvl.energy = p.level_energy(c_e);
    lvl.eta1 = lvl.eta2 = lvl.eta3 = lvl.eta_bar = kNaN;

    // the unique negative root: g(0) = C_E > 0, g -> -inf on the left
    double B = 4.0 * aa * std::max(1.0, std::sqrt(c_e) / aa);
    int guard = 0;
    while (g(-B) >= 0.0) {
        B *= 2.0;
        if (++guard > 200)
            throw RootClassificationError("level_roots: no sign change on the negative axis");
    }
    const double neg = polish_root(g, -B, 0.0, g(-B), c_e, tol);

    const double rel = (c_e - cstar) / cstar;
    if (std::fabs(rel) <= 4e-15) {
        // tangency: the positive roots coalesce at the critical point
        lvl.periodic = false;
        lvl.eta1 = neg;
        lvl.eta2 = lvl.eta3 = x2s;
        return lvl;
    }
    if (c_e > cstar) {
        lvl.periodic = false;
        lvl.eta_bar = neg;
        if (g(x2s) <= 0.0)
            throw RootClassificationError("level_roots: unexpected sign at the "
                                          "critical point on the one-root branch");
        return lvl;
    }

    lvl.periodic = true;
    lvl.eta1 = neg;
    const double gx2s = g(x2s);
    if (gx2s >= 0.0)
        throw RootClassificationError("level_roots: root count inconsistent with "
                                      "the branch classification");
    lvl.eta2 = polish_root(g, 0.0, x2s, c_e, gx2s, tol);
    double B3 = 8.0 * aa;
    guard = 0;
    while (g(B3) <= 0.0) {
        B3 *= 2.0;
        if (++guard > 200)
            throw RootClassificationError("level_roots: no sign change above the "
                                          "critical point");
    }
    lvl.eta3 = polish_root(g, x2s, B3, gx2s, g(B3), tol);
    if (!(lvl.eta1 < 0.0 && 0.0 < lvl.eta2 && lvl.eta2 < x2s && x2s < lvl.eta3))
        throw RootClassificationError("level_roots: root ordering violated");
    return lvl;
}

double period(double c_e, const TwoRingParams& p, double tol) {
    const double cstar = p.cstar();
    if (!(c_e < cstar))
        throw NonPeriodicLevelError("period: level is not on the periodic branch");
    const OrbitLevel lvl = level_roots(c_e, p, 1e-13);
    const double aa = p.alpha * p.a();
    const double e1 = lvl.eta1, e2 = lvl.eta2;
    const double span = e2 - e1;
    auto g = [&](double eta) { return c_e * std::exp(eta / aa) - eta * eta; };
    auto gp = [&](double eta) { return c_e * std::exp(eta / aa) / aa - 2.0 * eta; };

    // With x2 = eta1 + span sin^2(phi) the sin*cos of dx2 cancels against the
    // simple endpoint roots of the radicand, leaving the smooth factor
    // W = radicand / ((x2-eta1)(eta2-x2)).
    auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        const double x2 = e1 + span * s * s;
        double W;
        if (x2 - e1 < 1e-9 * span)
            W = gp(e1) / span;
        else if (e2 - x2 < 1e-9 * span)
            W = -gp(e2) / span;
        else
            W = g(x2) / ((x2 - e1) * (e2 - x2));
        return 2.0 * std::exp(x2 / aa) / std::sqrt(W);
    };
    const double pref = 4.0 * kPi * c_e / p.sum();
    return pref * adaptive_simpson(integrand, 0.0, 0.5 * kPi, tol / pref);
}

double planar_period(double E, const TwoRingParams& p) {
    const double re = std::exp(-2.0 * kPi * E / p.sum());
    return 4.0 * kPi * kPi * re * re / p.sum();
}

std::vector<double> detect_overtakings(const Trajectory& traj,
                                       const TwoRingParams& p) {
    std::vector<double> hits;
    const int n = static_cast<int>(traj.times.size());
    if (n < 2)
        return hits;
    auto x1_of = [&](int k) {
        return traj.states[k].centers[0].x() - traj.states[k].centers[1].x();
    };
    auto xdot_floor = [&](const Vec2& x) {
        return 1e-9 * p.sum() / (kTwoPi * std::max(x.norm(), 1e-300));
    };
    for (int k = 0; k + 1 < n; ++k) {
        const double f0 = x1_of(k);
        const double f1 = x1_of(k + 1);
        double tc, frac;
        if (f0 == 0.0) {
            if (k > 0 && x1_of(k - 1) * f1 >= 0.0)
                continue; // grazing, not a sign change
            tc = traj.times[k];
            frac = 0.0;
        } else if (f0 * f1 < 0.0) {
            frac = f0 / (f0 - f1);
            tc = traj.times[k] + frac * (traj.times[k + 1] - traj.times[k]);
        } else {
            continue;
        }
        ReducedState mid = traj.states[k];
        for (int i = 0; i < 2; ++i)
            mid.centers[i] = (1.0 - frac) * traj.states[k].centers[i] +
                             frac * traj.states[k + 1].centers[i];
        const auto v = reduced_rhs(mid);
        const Vec2 x = mid.centers[0] - mid.centers[1];
        if (std::fabs(v[0].x() - v[1].x()) >= xdot_floor(x))
            hits.push_back(tc);
    }
    return hits;
}

namespace {

Trajectory integrate_orbit(const TwoRingParams& p, double eta2, double T,
                           double dt) {
    ReducedState s0;
    auto [z1, z2] = inverse_two_ring(Vec2(0.0, eta2), Vec2::Zero(), p);
    s0.centers = {z1, z2};
    s0.intensities = {p.a1, p.a2};
    s0.alpha = p.alpha;
    return integrate_reduced(s0, T, dt, OdeScheme::RK4);
}

} // namespace

AlphaThreshold alpha_threshold(double rho, double E, int k, double a1, double a2,
                               double alpha_cap) {
    if (!(rho > 0.0))
        throw DomainError("alpha_threshold: rho must be positive");
    if (k < 1)
        throw DomainError("alpha_threshold: k must be a positive integer");
    const double sum = a1 + a2;
    if (sum == 0.0)
        throw DomainError("alpha_threshold: a1 + a2 must be nonzero");
    const double re = std::exp(-2.0 * kPi * E / sum);
    if (!(re > 4.0 * rho))
        throw DomainError("alpha_threshold: requires R_E > 4 rho");

    auto probe = [&](double alpha, AlphaCertificate* cert) -> bool {
        TwoRingParams p(a1, a2, alpha);
        double cstar;
        try {
            cstar = p.cstar();
        } catch (const DomainError&) {
            return false;
        }
        const double c_e = p.level_constant(E);
        if (!(c_e < cstar))
            return false;
        const OrbitLevel lvl = level_roots(c_e, p);
        const double te = period(c_e, p);
        const double tpl = planar_period(E, p);
        const double T = (k + 1) * tpl;
        if (!(k * te < T))
            return false;
        const Trajectory traj = integrate_orbit(p, lvl.eta2, T, te / 4096.0);
        if (cert) {
            cert->min_separation = traj.min_separation;
            cert->period = te;
            cert->planar_period = tpl;
            cert->c_e = c_e;
            cert->c_star = cstar;
        }
        return traj.min_separation >= 4.0 * rho;
    };

    // bracket: lo fails (or 0 if everything tested passed), hi passes
    double hi, lo;
    if (probe(1.0, nullptr)) {
        hi = 1.0;
        lo = 0.5;
        while (probe(lo, nullptr)) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-9) {
                lo = 0.0;
                break;
            }
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        while (!probe(hi, nullptr)) {
            lo = hi;
            hi *= 2.0;
            if (hi > alpha_cap)
                throw SearchError("alpha_threshold: no admissible alpha below the cap " +
                                  std::to_string(alpha_cap));
        }
    }
    for (int it = 0; it < 40 && lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid, nullptr))
            hi = mid;
        else
            lo = mid;
    }
    AlphaThreshold out;
    out.alpha = hi;
    if (!probe(hi, &out.certificate))
        throw SearchError("alpha_threshold: bisection endpoint failed re-verification");
    return out;
}

std::vector<LevelCurve> phase_portrait(const TwoRingParams& p,
                                       const std::vector<double>& levels,
                                       int samples, double window) {
    if (samples < 8)
        throw DomainError("phase_portrait: need at least 8 samples per component");
    const double aa = p.alpha * p.a();
    std::vector<LevelCurve> curves;
    for (double c_e : levels) {
        const OrbitLevel lvl = level_roots(c_e, p);
        auto f = [&](double x2) {
            const double rad = c_e * std::exp(x2 / aa) - x2 * x2;
            return std::sqrt(std::max(rad, 0.0));
        };
        if (lvl.periodic) {
            LevelCurve closed;
            closed.level = c_e;
            closed.closed = true;
            const double span = lvl.eta2 - lvl.eta1;
            for (int j = 0; j <= samples; ++j) {
                const double phi = 0.5 * kPi * j / samples;
                const double s = std::sin(phi);
                closed.points.emplace_back(f(lvl.eta1 + span * s * s),
                                           lvl.eta1 + span * s * s);
            }
            for (int j = samples - 1; j >= 0; --j) {
                const double phi = 0.5 * kPi * j / samples;
                const double s = std::sin(phi);
                closed.points.emplace_back(-f(lvl.eta1 + span * s * s),
                                           lvl.eta1 + span * s * s);
            }
            closed.points.push_back(closed.points.front());
            curves.push_back(std::move(closed));
        }
        // unbounded component, clipped
        const double base = lvl.periodic ? lvl.eta3
                                         : (std::isnan(lvl.eta_bar) ? lvl.eta1
                                                                    : lvl.eta_bar);
        double top = window > base ? window : 1.6 * std::fabs(base) + 2.0 * aa;
        LevelCurve open;
        open.level = c_e;
        open.closed = false;
        for (int j = samples; j >= 1; --j)
            open.points.emplace_back(f(base + (top - base) * j / samples),
                                     base + (top - base) * j / samples);
        for (int j = 0; j <= samples; ++j)
            open.points.emplace_back(-f(base + (top - base) * j / samples),
                                     base + (top - base) * j / samples);
        curves.push_back(std::move(open));
    }
    return curves;
}

} // namespace vring
