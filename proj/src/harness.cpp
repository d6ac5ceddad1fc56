/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Experiment drivers.
 *
 ******************************************************************************/

#include "vring/harness.hpp"

#include <algorithm>
#include <cmath>

#include "vring/errors.hpp"
#include "vring/io.hpp"

namespace vring {

SimRun run_simulation(const SimConfig& cfg, double eps, std::ostream* log) {
    ParticleSystem ps = init_particles(cfg.rings, eps, cfg.alpha, cfg.n_side,
                                       cfg.delta_exponent);
    const double dt = cfg.dt_auto ? auto_dt(ps) : cfg.dt;
    SimRun run;
    run.eps = eps;
    run.dt = dt;
    if (log)
        *log << "eps=" << eps << " particles=" << ps.size() << " dt=" << dt
             << " delta=" << ps.delta << "\n";
    run.frames.push_back(diagnostics(ps, cfg.tail_radius));
    int k = 0;
    while (ps.time < cfg.t_end) {
        const double h = std::min(dt, cfg.t_end - ps.time);
        ps = step(ps, h, BlobScheme::RK4);
        if (cfg.t_end - ps.time < 1e-12 * cfg.t_end)
            ps.time = cfg.t_end;
        ++k;
        if (k % cfg.diag_stride == 0 || ps.time >= cfg.t_end)
            run.frames.push_back(diagnostics(ps, cfg.tail_radius));
    }
    run.steps = k;
    return run;
}

ReducedState reduced_from_config(const SimConfig& cfg) {
    ReducedState s;
    s.alpha = cfg.alpha;
    for (const auto& r : cfg.rings) {
        s.centers.push_back(r.center);
        s.intensities.push_back(r.intensity);
    }
    return s;
}

namespace {

// Sampled reference: linear interpolation on a grid fine enough that the
// interpolation error is far below the measured center errors.
struct ReducedReference {
    Trajectory traj;

    Vec2 at(int ring, double t) const {
        const auto& ts = traj.times;
        if (t <= ts.front())
            return traj.states.front().centers[ring];
        if (t >= ts.back())
            return traj.states.back().centers[ring];
        const auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const size_t k = static_cast<size_t>(it - ts.begin()) - 1;
        const double f = (t - ts[k]) / (ts[k + 1] - ts[k]);
        return (1.0 - f) * traj.states[k].centers[ring] +
               f * traj.states[k + 1].centers[ring];
    }
};

} // namespace

ConvergenceReport run_convergence(const SimConfig& cfg, std::ostream* log) {
    validate_sim(cfg);
    ReducedReference ref;
    ref.traj = integrate_reduced(reduced_from_config(cfg), cfg.t_end,
                                 cfg.t_end / 8192.0, OdeScheme::RK4);
    ConvergenceReport report;
    for (double eps : cfg.eps_list) {
        SimRun run;
        try {
            run = run_simulation(cfg, eps, log);
        } catch (BlowupError& e) {
            throw BlowupError("convergence sweep at eps = " + std::to_string(eps) +
                              ": " + e.what(), e.particle, e.time);
        }
        ConvergenceRow row;
        row.eps = eps;
        for (const auto& f : run.frames) {
            for (int i = 0; i < static_cast<int>(cfg.rings.size()); ++i) {
                row.max_center_error = std::max(
                    row.max_center_error, (f.centers[i] - ref.at(i, f.time)).norm());
                row.max_inertia = std::max(row.max_inertia, f.inertia[i]);
                row.max_tail_mass = std::max(row.max_tail_mass, f.tail_mass[i]);
            }
        }
        if (log)
            *log << "eps=" << eps << " max_center_error=" << row.max_center_error
                 << " max_J=" << row.max_inertia << " max_tail=" << row.max_tail_mass
                 << "\n";
        report.rows.push_back(row);
    }
    report.monotone = true;
    for (size_t i = 1; i < report.rows.size(); ++i)
        if (!(report.rows[i].max_center_error < report.rows[i - 1].max_center_error))
            report.monotone = false;
    return report;
}

LeapfrogSummary run_leapfrog_demo(const TwoRingParams& params, double c_e, int k,
                                  const std::string& out_dir) {
    const OrbitLevel lvl = level_roots(c_e, params);
    if (!lvl.periodic)
        throw NonPeriodicLevelError("run_leapfrog_demo: level is not periodic");
    const double te = period(c_e, params);

    LeapfrogSummary s;
    s.alpha = params.alpha;
    s.c_e = c_e;
    s.c_star = params.cstar();
    s.period = te;
    s.t_end = k * te + 0.5 * te;

    ReducedState s0;
    auto [z1, z2] = inverse_two_ring(Vec2(0.0, lvl.eta2), Vec2::Zero(), params);
    s0.centers = {z1, z2};
    s0.intensities = {params.a1, params.a2};
    s0.alpha = params.alpha;
    const Trajectory traj = integrate_reduced(s0, s.t_end, te / 4096.0);

    s.crossing_times = detect_overtakings(traj, params);
    const double h0 = hamiltonian(Vec2(0.0, lvl.eta2), params);
    double drift = 0.0;
    for (const auto& st : traj.states) {
        const Vec2 x = st.centers[0] - st.centers[1];
        drift = std::max(drift, std::fabs(hamiltonian(x, params) - h0));
    }
    s.h_drift_rel = drift / std::max(std::fabs(h0), 1e-300);

    write_trajectory_csv(out_dir + "/trajectory.csv", traj);
    {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < s.crossing_times.size(); ++i)
            rows.push_back({static_cast<double>(i + 1), s.crossing_times[i]});
        write_csv(out_dir + "/overtakings.csv", {"index", "t"}, rows);
    }
    {
        std::vector<PlotCurve> curves;
        for (const auto& lc : phase_portrait(params, {c_e}, 512)) {
            PlotCurve pc;
            pc.label = format_value(lc.level);
            pc.points = lc.points;
            curves.push_back(std::move(pc));
        }
        PlotCurve orbit;
        orbit.label = "trajectory";
        const size_t stride = std::max<size_t>(1, traj.states.size() / 4096);
        for (size_t i = 0; i < traj.states.size(); i += stride)
            orbit.points.push_back(traj.states[i].centers[0] - traj.states[i].centers[1]);
        curves.push_back(std::move(orbit));
        write_svg(out_dir + "/portrait.svg", curves);
    }
    return s;
}

} // namespace vring
