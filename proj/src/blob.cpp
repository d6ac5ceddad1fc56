/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Blob simulator: initialization, O(N^2) velocity sums, time stepping,
 * diagnostics.
 *
 ******************************************************************************/

#include "vring/blob.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vring/errors.hpp"
#include "vring/kernel_tables.hpp"
#include "vring/kernels.hpp"

namespace vring {

namespace {

std::string ordinal(int i) { return "ring " + std::to_string(i + 1); }

} // namespace

ParticleSystem init_particles(const std::vector<RingSpec>& rings, double eps,
                              double alpha, int n_side, double delta_exponent) {
    if (rings.empty())
        throw ConfigError("init_particles: no rings");
    if (!(eps > 0.0) || !(eps < 1.0))
        throw ConfigError("init_particles: eps must lie in (0,1)");
    if (!(alpha > 0.0))
        throw ConfigError("init_particles: alpha must be positive");
    if (n_side < 2)
        throw ConfigError("init_particles: n_side must be at least 2");

    const int n_rings = static_cast<int>(rings.size());
    std::vector<double> radius(n_rings);
    for (int i = 0; i < n_rings; ++i) {
        if (rings[i].intensity == 0.0)
            throw ConfigError("init_particles: " + ordinal(i) + " has zero intensity");
        radius[i] = rings[i].patch_radius > 0.0 ? rings[i].patch_radius : eps;
    }
    for (int i = 0; i < n_rings; ++i)
        for (int j = i + 1; j < n_rings; ++j)
            if ((rings[i].center - rings[j].center).norm() <= radius[i] + radius[j])
                throw ConfigError("init_particles: patches of " + ordinal(i) +
                                  " and " + ordinal(j) + " overlap");

    ParticleSystem ps;
    ps.n_rings = n_rings;
    ps.eps = eps;
    ps.alpha = alpha;
    ps.r_eps = alpha * std::fabs(std::log(eps));

    double h_min = 0.0;
    for (int i = 0; i < n_rings; ++i) {
        const double rho = radius[i];
        const int m = n_side - 1;
        const double h = 2.0 * rho / m;
        if (h_min == 0.0 || h < h_min)
            h_min = h;
        int kept = 0;
        // node (jx, jy) sits at center + rho*(2j - m)/m; the strict-interior
        // test is exact in the doubled integer offsets
        for (int jy = 0; jy < n_side; ++jy) {
            for (int jx = 0; jx < n_side; ++jx) {
                const long ox = 2L * jx - m;
                const long oy = 2L * jy - m;
                if (ox * ox + oy * oy >= static_cast<long>(m) * m)
                    continue;
                ps.x1.push_back(rings[i].center.x() + 0.5 * h * ox);
                ps.x2.push_back(rings[i].center.y() + 0.5 * h * oy);
                ps.ring.push_back(i);
                ++kept;
            }
        }
        if (kept == 0)
            throw ConfigError("init_particles: " + ordinal(i) + " kept no grid nodes");
        const double wp = rings[i].intensity / kept;
        for (int k = 0; k < kept; ++k)
            ps.w.push_back(wp);
        ps.intensity.push_back(rings[i].intensity);
        ps.ring_size.push_back(kept);
        ps.density_bound.push_back(std::fabs(wp) / (h * h));
    }
    ps.spacing = h_min;
    ps.delta = delta_exponent < 0.0 ? 0.0 : std::pow(h_min, delta_exponent);

    for (int p = 0; p < ps.size(); ++p)
        if (!(ps.r_eps + ps.x2[p] > 0.0))
            throw ConfigError("init_particles: particle outside the half-plane r_eps + x2 > 0");
    return ps;
}

Vec2 velocity_field(const ParticleSystem& ps, const Vec2& x, int exclude) {
    const double p = ps.r_eps + x.y();
    if (!(p > 0.0))
        throw DomainError("velocity_field: point outside the physical half-plane");
    const auto& tab = KernelTables::instance();
    const double del2 = ps.delta * ps.delta;
    Vec2 u = Vec2::Zero();
    const int n = ps.size();
    for (int s = 0; s < n; ++s) {
        if (s == exclude)
            continue;
        const double dx = x.x() - ps.x1[s];
        const double dy = x.y() - ps.x2[s];
        if (del2 == 0.0 && dx == 0.0 && dy == 0.0)
            throw SingularityError("velocity_field: evaluation at particle " +
                                   std::to_string(s) + " with delta = 0");
        const double q = ps.r_eps + ps.x2[s];
        u += ps.w[s] * fast::h_regularized(tab, p, q, dx, dy, del2);
    }
    return u;
}

namespace {

// Velocities at all particle positions (xs, ys) induced by sources at the
// same positions. Parallel over targets; each target accumulates its sources
// in index order, so results do not depend on the thread count.
void bulk_velocities(const ParticleSystem& ps, const std::vector<double>& xs,
                     const std::vector<double>& ys, double time,
                     std::vector<double>& u1, std::vector<double>& u2) {
    const int n = ps.size();
    for (int p = 0; p < n; ++p)
        if (!(ps.r_eps + ys[p] > 0.0))
            throw BlowupError("step: particle " + std::to_string(p) +
                              " left the half-plane at t = " + std::to_string(time),
                              p, time);
    const auto& tab = KernelTables::instance();
    const double del2 = ps.delta * ps.delta;
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    if (del2 > 0.0) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int t = 0; t < n; ++t) {
            const double tx = xs[t], ty = ys[t];
            const double p = ps.r_eps + ty;
            double a1 = 0.0, a2 = 0.0;
            for (int s = 0; s < n; ++s) {
                const double q = ps.r_eps + ys[s];
                const Vec2 h = fast::h_regularized(tab, p, q, tx - xs[s], ty - ys[s], del2);
                a1 += ps.w[s] * h.x();
                a2 += ps.w[s] * h.y();
            }
            u1[t] = a1;
            u2[t] = a2;
        }
        return;
    }
    // delta = 0: single-particle rings only; a particle induces no velocity
    // on itself, and coincidence of distinct particles is singular.
    for (int t = 0; t < n; ++t) {
        const double tx = xs[t], ty = ys[t];
        const double p = ps.r_eps + ty;
        double a1 = 0.0, a2 = 0.0;
        for (int s = 0; s < n; ++s) {
            if (s == t)
                continue;
            const double dx = tx - xs[s], dy = ty - ys[s];
            if (dx == 0.0 && dy == 0.0)
                throw SingularityError("step: coincident particles with delta = 0");
            const double q = ps.r_eps + ys[s];
            const Vec2 h = fast::h_regularized(tab, p, q, dx, dy, 0.0);
            a1 += ps.w[s] * h.x();
            a2 += ps.w[s] * h.y();
        }
        u1[t] = a1;
        u2[t] = a2;
    }
}

} // namespace

ParticleSystem step(const ParticleSystem& ps, double dt, BlobScheme scheme) {
    if (!(dt > 0.0))
        throw DomainError("step: dt must be positive");
    if (ps.delta == 0.0)
        for (int i = 0; i < ps.n_rings; ++i)
            if (ps.ring_size[i] > 1)
                throw ConfigError("step: delta must be positive when a ring has "
                                  "more than one particle");
    const int n = ps.size();
    ParticleSystem out = ps;
    std::vector<double> u1, u2;

    if (scheme == BlobScheme::Euler) {
        bulk_velocities(ps, ps.x1, ps.x2, ps.time, u1, u2);
        for (int p = 0; p < n; ++p) {
            out.x1[p] = ps.x1[p] + dt * u1[p];
            out.x2[p] = ps.x2[p] + dt * u2[p];
        }
    } else {
        std::vector<double> k1x(n), k1y(n), k2x(n), k2y(n), k3x(n), k3y(n);
        std::vector<double> tx(n), ty(n);
        bulk_velocities(ps, ps.x1, ps.x2, ps.time, u1, u2);
        k1x = u1;
        k1y = u2;
        for (int p = 0; p < n; ++p) {
            tx[p] = ps.x1[p] + 0.5 * dt * k1x[p];
            ty[p] = ps.x2[p] + 0.5 * dt * k1y[p];
        }
        bulk_velocities(ps, tx, ty, ps.time, u1, u2);
        k2x = u1;
        k2y = u2;
        for (int p = 0; p < n; ++p) {
            tx[p] = ps.x1[p] + 0.5 * dt * k2x[p];
            ty[p] = ps.x2[p] + 0.5 * dt * k2y[p];
        }
        bulk_velocities(ps, tx, ty, ps.time, u1, u2);
        k3x = u1;
        k3y = u2;
        for (int p = 0; p < n; ++p) {
            tx[p] = ps.x1[p] + dt * k3x[p];
            ty[p] = ps.x2[p] + dt * k3y[p];
        }
        bulk_velocities(ps, tx, ty, ps.time, u1, u2);
        for (int p = 0; p < n; ++p) {
            out.x1[p] = ps.x1[p] + dt / 6.0 * (k1x[p] + 2.0 * (k2x[p] + k3x[p]) + u1[p]);
            out.x2[p] = ps.x2[p] + dt / 6.0 * (k1y[p] + 2.0 * (k2y[p] + k3y[p]) + u2[p]);
        }
    }
    out.time = ps.time + dt;
    for (int p = 0; p < n; ++p)
        if (!(out.r_eps + out.x2[p] > 0.0))
            throw BlowupError("step: particle " + std::to_string(p) +
                              " left the half-plane at t = " + std::to_string(out.time),
                              p, out.time);
    return out;
}

DiagnosticsFrame diagnostics(const ParticleSystem& ps, double tail_radius) {
    if (!(tail_radius > 0.0))
        throw DomainError("diagnostics: tail_radius must be positive");
    const int n = ps.size();
    const int nr = ps.n_rings;
    DiagnosticsFrame f;
    f.time = ps.time;
    f.centers.assign(nr, Vec2::Zero());
    f.inertia.assign(nr, 0.0);
    f.tail_mass.assign(nr, 0.0);
    f.circulation.assign(nr, 0.0);
    f.self_energy.assign(nr, 0.0);
    f.cross_energy.assign(nr * (nr - 1) / 2, 0.0);

    for (int p = 0; p < n; ++p) {
        const int i = ps.ring[p];
        f.circulation[i] += ps.w[p];
        f.centers[i] += ps.w[p] * Vec2(ps.x1[p], ps.x2[p]);
    }
    for (int i = 0; i < nr; ++i)
        f.centers[i] /= ps.intensity[i];
    for (int p = 0; p < n; ++p) {
        const int i = ps.ring[p];
        const double sgn = ps.intensity[i] < 0.0 ? -1.0 : 1.0;
        const Vec2 d = Vec2(ps.x1[p], ps.x2[p]) - f.centers[i];
        f.inertia[i] += sgn * ps.w[p] * d.squaredNorm();
        if (d.norm() > tail_radius)
            f.tail_mass[i] += sgn * ps.w[p];
    }

    // Pairwise stream-kernel energies. Row sums are combined in index order
    // so the result is independent of the thread count.
    const auto& tab = KernelTables::instance();
    const double del2 = ps.delta * ps.delta;
    const int nblock = nr * nr;
    std::vector<double> row_block(static_cast<size_t>(n) * nblock, 0.0);
    std::vector<double> row_reg(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int p = 0; p < n; ++p) {
        const double px = ps.x1[p], py = ps.x2[p];
        const double pr = ps.r_eps + py;
        double* blk = &row_block[static_cast<size_t>(p) * nblock];
        double reg = 0.0;
        for (int q = p; q < n; ++q) {
            const double dx = px - ps.x1[q];
            const double dy = py - ps.x2[q];
            const double qr = ps.r_eps + ps.x2[q];
            const double ww = ps.w[p] * ps.w[q];
            const double s_reg = fast::s_regularized(tab, pr, qr, dx, dy, del2);
            if (q == p) {
                blk[ps.ring[p] * nr + ps.ring[p]] += ww * s_reg;
                reg += ww * s_reg;
            } else {
                const double s_exact = fast::s_regularized(tab, pr, qr, dx, dy, 0.0);
                blk[ps.ring[p] * nr + ps.ring[q]] += 2.0 * ww * s_exact;
                reg += 2.0 * ww * s_reg;
            }
        }
        row_reg[p] = reg;
    }
    std::vector<double> block(nblock, 0.0);
    double ereg = 0.0;
    for (int p = 0; p < n; ++p) {
        const double* blk = &row_block[static_cast<size_t>(p) * nblock];
        for (int b = 0; b < nblock; ++b)
            block[b] += blk[b];
        ereg += row_reg[p];
    }
    int c = 0;
    double total = 0.0;
    for (int i = 0; i < nr; ++i) {
        f.self_energy[i] = kPi * block[i * nr + i];
        total += f.self_energy[i];
    }
    for (int i = 0; i < nr; ++i)
        for (int j = i + 1; j < nr; ++j) {
            // the (p<q) loop already saw each unordered pair once with factor 2
            f.cross_energy[c] = 0.5 * kPi * (block[i * nr + j] + block[j * nr + i]);
            total += 2.0 * f.cross_energy[c];
            ++c;
        }
    f.total_energy = total;
    f.regularized_energy = kPi * ereg;
    return f;
}

double regularized_energy(const ParticleSystem& ps) {
    const auto& tab = KernelTables::instance();
    const double del2 = ps.delta * ps.delta;
    const int n = ps.size();
    std::vector<double> row(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int p = 0; p < n; ++p) {
        const double px = ps.x1[p], py = ps.x2[p];
        const double pr = ps.r_eps + py;
        double acc = 0.0;
        for (int q = p; q < n; ++q) {
            const double s = fast::s_regularized(tab, pr, ps.r_eps + ps.x2[q],
                                                 px - ps.x1[q], py - ps.x2[q], del2);
            acc += (q == p ? 1.0 : 2.0) * ps.w[p] * ps.w[q] * s;
        }
        row[p] = acc;
    }
    double e = 0.0;
    for (int p = 0; p < n; ++p)
        e += row[p];
    return kPi * e;
}

double auto_dt(const ParticleSystem& ps) {
    double dmax = 0.0;
    for (double d : ps.density_bound)
        dmax = std::max(dmax, d);
    if (dmax == 0.0)
        throw DomainError("auto_dt: empty system");
    return 0.4 / dmax;
}

} // namespace vring
