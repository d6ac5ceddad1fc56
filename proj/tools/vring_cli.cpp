/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Command-line driver. Exit codes: 0 success, 2 configuration error,
 * 3 numerical failure.
 *
 ******************************************************************************/

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vring/errors.hpp"
#include "vring/harness.hpp"
#include "vring/io.hpp"

namespace {

using namespace vring;

struct Options {
    std::string config;
    std::string out = ".";
    bool quiet = false;
};

std::ostream* log_stream(const Options& opt) {
    return opt.quiet ? nullptr : &std::cout;
}

void ensure_out_dir(const Options& opt) {
    std::filesystem::create_directories(opt.out);
}

TwoRingConfig require_two_ring(const Config& cfg) {
    if (!cfg.has_two_ring)
        throw ConfigError("this subcommand needs a [two_ring] section");
    return cfg.two_ring;
}

double two_ring_level(const TwoRingConfig& t, const TwoRingParams& p) {
    if (t.has_c_e)
        return t.c_e;
    if (t.has_energy)
        return p.level_constant(t.energy);
    throw ConfigError("[two_ring] needs either c_e or energy");
}

void cmd_simulate(const Config& cfg, const Options& opt) {
    validate_sim(cfg.sim);
    const double eps = cfg.sim.eps_list.front();
    const SimRun run = run_simulation(cfg.sim, eps, log_stream(opt));
    ensure_out_dir(opt);
    write_frames_csv(opt.out + "/diagnostics.csv", run.frames,
                     static_cast<int>(cfg.sim.rings.size()));
    if (!opt.quiet)
        std::cout << "simulate: " << run.steps << " steps, "
                  << run.frames.size() << " frames -> " << opt.out
                  << "/diagnostics.csv\n";
}

void cmd_reduced(const Config& cfg, const Options& opt) {
    validate_sim(cfg.sim);
    const ReducedState s0 = reduced_from_config(cfg.sim);
    const double dt = cfg.sim.dt_auto ? cfg.sim.t_end / 8192.0 : cfg.sim.dt;
    const Trajectory traj = integrate_reduced(s0, cfg.sim.t_end, dt);
    ensure_out_dir(opt);
    write_trajectory_csv(opt.out + "/reduced.csv", traj);
    if (!opt.quiet)
        std::cout << "reduced: " << traj.times.size() << " states, min separation "
                  << traj.min_separation << " -> " << opt.out << "/reduced.csv\n";
}

void cmd_portrait(const Config& cfg, const Options& opt) {
    const TwoRingConfig t = require_two_ring(cfg);
    TwoRingParams p(t.a1, t.a2, t.alpha);
    std::vector<double> levels = t.levels;
    if (levels.empty()) {
        const double cs = p.cstar();
        levels = {0.25 * cs, 0.5 * cs, 0.75 * cs, 1.25 * cs};
    }
    const auto curves = phase_portrait(p, levels, t.samples, t.window);
    ensure_out_dir(opt);
    std::vector<PlotCurve> plot;
    std::vector<std::vector<double>> rows;
    for (size_t c = 0; c < curves.size(); ++c) {
        PlotCurve pc;
        pc.label = format_value(curves[c].level);
        pc.points = curves[c].points;
        plot.push_back(std::move(pc));
        for (const auto& q : curves[c].points)
            rows.push_back({curves[c].level, static_cast<double>(c),
                            curves[c].closed ? 1.0 : 0.0, q.x(), q.y()});
    }
    write_svg(opt.out + "/portrait.svg", plot);
    write_csv(opt.out + "/portrait.csv",
              {"level", "curve", "closed", "x1", "x2"}, rows);
    if (!opt.quiet)
        std::cout << "phase-portrait: " << curves.size() << " components -> "
                  << opt.out << "/portrait.{svg,csv}\n";
}

void cmd_period(const Config& cfg, const Options& opt) {
    const TwoRingConfig t = require_two_ring(cfg);
    TwoRingParams p(t.a1, t.a2, t.alpha);
    const double c_e = two_ring_level(t, p);
    const OrbitLevel lvl = level_roots(c_e, p);
    std::vector<std::string> header{"c_e", "energy", "c_star", "periodic",
                                    "eta1", "eta2", "eta3", "eta_bar", "T", "T_planar"};
    std::vector<double> row{lvl.c_e, lvl.energy, p.cstar(),
                            lvl.periodic ? 1.0 : 0.0, lvl.eta1, lvl.eta2,
                            lvl.eta3, lvl.eta_bar,
                            lvl.periodic ? period(c_e, p) : std::nan(""),
                            planar_period(lvl.energy, p)};
    ensure_out_dir(opt);
    write_csv(opt.out + "/level.csv", header, {row});
    if (!opt.quiet) {
        std::cout << "level c_e=" << c_e << " (c*=" << p.cstar() << "): "
                  << (lvl.periodic ? "periodic" : "non-periodic");
        if (lvl.periodic)
            std::cout << ", T=" << row[8];
        std::cout << " -> " << opt.out << "/level.csv\n";
    }
}

void cmd_converge(const Config& cfg, const Options& opt) {
    validate_sim(cfg.sim);
    const ConvergenceReport rep = run_convergence(cfg.sim, log_stream(opt));
    ensure_out_dir(opt);
    std::vector<std::vector<double>> rows;
    for (const auto& r : rep.rows)
        rows.push_back({r.eps, r.max_center_error, r.max_inertia, r.max_tail_mass});
    write_csv(opt.out + "/convergence.csv",
              {"eps", "max_center_error", "max_J", "max_tail_mass"}, rows);
    if (!opt.quiet)
        std::cout << "converge: monotone=" << (rep.monotone ? "yes" : "no")
                  << " -> " << opt.out << "/convergence.csv\n";
}

void cmd_leapfrog(const Config& cfg, const Options& opt) {
    const TwoRingConfig t = require_two_ring(cfg);
    double alpha = t.alpha;
    if (t.alpha_auto) {
        if (!t.has_energy)
            throw ConfigError("[two_ring] alpha = auto needs an energy value");
        const AlphaThreshold th = alpha_threshold(t.rho, t.energy, t.k, t.a1, t.a2);
        alpha = th.alpha;
        if (!opt.quiet)
            std::cout << "alpha threshold: " << alpha << " (min separation "
                      << th.certificate.min_separation << ", T=" << th.certificate.period
                      << ")\n";
    }
    TwoRingParams p(t.a1, t.a2, alpha);
    const double c_e = two_ring_level(t, p);
    ensure_out_dir(opt);
    const LeapfrogSummary s = run_leapfrog_demo(p, c_e, t.k, opt.out);
    if (!opt.quiet)
        std::cout << "leapfrog: " << s.crossing_times.size() << " overtakings in t<="
                  << s.t_end << ", H drift " << s.h_drift_rel << " -> " << opt.out
                  << "/{trajectory,overtakings}.csv, portrait.svg\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vring: concentrated axisymmetric vortex ring laboratory"};
    app.require_subcommand(1);

    Options opt;
    const char* names[] = {"simulate", "reduced", "phase-portrait",
                           "period", "converge", "leapfrog"};
    const char* blurbs[] = {
        "run the blob simulator at the first eps of eps_list",
        "integrate the limiting center dynamics",
        "trace two-ring level sets to SVG/CSV",
        "roots and period of one two-ring level",
        "eps-convergence sweep against the limiting dynamics",
        "two-ring leapfrogging demonstration"};
    for (int i = 0; i < 6; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], blurbs[i]);
        sub->add_option("--config", opt.config, "config file path")->required();
        sub->add_option("--out", opt.out, "output directory");
        sub->add_flag("--quiet", opt.quiet, "suppress progress output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Config cfg = load_config(opt.config);
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "simulate")
            cmd_simulate(cfg, opt);
        else if (sub == "reduced")
            cmd_reduced(cfg, opt);
        else if (sub == "phase-portrait")
            cmd_portrait(cfg, opt);
        else if (sub == "period")
            cmd_period(cfg, opt);
        else if (sub == "converge")
            cmd_converge(cfg, opt);
        else if (sub == "leapfrog")
            cmd_leapfrog(cfg, opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
