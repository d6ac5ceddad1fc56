/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Experiment orchestration: single runs, the eps-convergence sweep and
 * the two-ring leapfrogging demonstration.
 *
 ******************************************************************************/

#ifndef VRING_HARNESS_HPP
#define VRING_HARNESS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "vring/blob.hpp"
#include "vring/config.hpp"
#include "vring/leapfrog.hpp"
#include "vring/reduced.hpp"

namespace vring {

/// One blob run at a given eps: diagnostics every diag_stride steps plus the
/// initial and final instants.
struct SimRun {
    double eps = 0.0;
    double dt = 0.0;
    int steps = 0;
    std::vector<DiagnosticsFrame> frames;
};

SimRun run_simulation(const SimConfig& cfg, double eps, std::ostream* log = nullptr);

/// The reduced system assembled from the [simulation] rings.
ReducedState reduced_from_config(const SimConfig& cfg);

struct ConvergenceRow {
    double eps = 0.0;
    double max_center_error = 0.0; // max over time and rings of |B^i - zeta^i|
    double max_inertia = 0.0;
    double max_tail_mass = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows; // ordered by decreasing eps
    bool monotone = false;            // center error strictly decreasing
};

/// Run the sweep over cfg.eps_list against one reduced reference trajectory.
ConvergenceReport run_convergence(const SimConfig& cfg, std::ostream* log = nullptr);

struct LeapfrogSummary {
    double alpha = 0.0;
    double c_e = 0.0;
    double c_star = 0.0;
    double period = 0.0;
    double t_end = 0.0;
    std::vector<double> crossing_times;
    double h_drift_rel = 0.0; // max |H(x(t)) - H0| / |H0|
};

/// Integrate the two-ring system for k periods and a half, starting at the
/// lower turning point (0, eta2) of the level c_e, detect overtakings and
/// write trajectory.csv, overtakings.csv and portrait.svg under out_dir.
LeapfrogSummary run_leapfrog_demo(const TwoRingParams& params, double c_e, int k,
                                  const std::string& out_dir);

} // namespace vring

#endif
