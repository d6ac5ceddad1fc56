/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Run configuration: a flat key-value text format with section headers.
 * See README.md for the grammar.
 *
 ******************************************************************************/

#ifndef VRING_CONFIG_HPP
#define VRING_CONFIG_HPP

#include <string>
#include <vector>

#include "vring/blob.hpp"
#include "vring/types.hpp"

namespace vring {

/// Blob-simulation settings ([simulation] section plus [ring] sections).
struct SimConfig {
    std::vector<RingSpec> rings;
    std::vector<double> eps_list; // strictly decreasing, all in (0,1)
    double alpha = 1.0;
    int n_side = 16;
    double delta_exponent = 0.9;
    bool dt_auto = true;
    double dt = 0.0;
    double t_end = 1.0;
    double tail_radius = 0.3;
    int diag_stride = 10;
};

/// Two-ring analysis settings ([two_ring] section).
struct TwoRingConfig {
    double a1 = 2.0;
    double a2 = 1.0;
    bool alpha_auto = false; // alpha = auto -> run the threshold search
    double alpha = 1.0;
    bool has_energy = false;
    double energy = 0.0;
    bool has_c_e = false;
    double c_e = 0.0;
    int k = 3;
    double rho = 0.3;
    std::vector<double> levels; // phase-portrait levels (C_E values)
    int samples = 256;
    double window = 0.0;
};

struct Config {
    SimConfig sim;
    TwoRingConfig two_ring;
    bool has_two_ring = false;
};

/// Parse and validate; ConfigError on any syntax, typing or consistency
/// problem (unknown keys are rejected).
Config load_config(const std::string& path);
Config parse_config(const std::string& text, const std::string& origin = "<string>");

/// Cross-field checks shared by load and the harness: decreasing eps_list,
/// disjoint patches and half-plane admissibility for every eps of the sweep.
void validate_sim(const SimConfig& cfg);

} // namespace vring

#endif
