/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Config file parsing and validation.
 *
 ******************************************************************************/

#include "vring/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vring/errors.hpp"

namespace vring {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& where) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected a number, got '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& where) {
    try {
        size_t pos = 0;
        const int i = std::stoi(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected an integer, got '" + v + "'");
    }
}

std::vector<double> to_list(const std::string& v, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError(where + ": empty list entry");
        out.push_back(to_double(item, where));
    }
    if (out.empty())
        throw ConfigError(where + ": empty list");
    return out;
}

} // namespace

Config parse_config(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int ring_idx = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section == "ring") {
                cfg.sim.rings.push_back(RingSpec{});
                ring_idx = static_cast<int>(cfg.sim.rings.size()) - 1;
            } else if (section == "two_ring") {
                cfg.has_two_ring = true;
            } else if (section != "simulation") {
                throw ConfigError(where + ": unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section == "simulation") {
            if (key == "eps_list")
                cfg.sim.eps_list = to_list(val, where);
            else if (key == "alpha")
                cfg.sim.alpha = to_double(val, where);
            else if (key == "n_side")
                cfg.sim.n_side = to_int(val, where);
            else if (key == "delta_exponent")
                cfg.sim.delta_exponent = to_double(val, where);
            else if (key == "dt") {
                if (val == "auto") {
                    cfg.sim.dt_auto = true;
                } else {
                    cfg.sim.dt_auto = false;
                    cfg.sim.dt = to_double(val, where);
                }
            } else if (key == "t_end")
                cfg.sim.t_end = to_double(val, where);
            else if (key == "tail_radius")
                cfg.sim.tail_radius = to_double(val, where);
            else if (key == "diag_stride")
                cfg.sim.diag_stride = to_int(val, where);
            else
                throw ConfigError(where + ": unknown key '" + key + "' in [simulation]");
        } else if (section == "ring") {
            RingSpec& r = cfg.sim.rings[ring_idx];
            if (key == "intensity")
                r.intensity = to_double(val, where);
            else if (key == "center") {
                const auto c = to_list(val, where);
                if (c.size() != 2)
                    throw ConfigError(where + ": center needs two components");
                r.center = Vec2(c[0], c[1]);
            } else if (key == "patch_radius")
                r.patch_radius = to_double(val, where);
            else
                throw ConfigError(where + ": unknown key '" + key + "' in [ring]");
        } else if (section == "two_ring") {
            TwoRingConfig& t = cfg.two_ring;
            if (key == "a1")
                t.a1 = to_double(val, where);
            else if (key == "a2")
                t.a2 = to_double(val, where);
            else if (key == "alpha") {
                if (val == "auto")
                    t.alpha_auto = true;
                else
                    t.alpha = to_double(val, where);
            } else if (key == "energy") {
                t.has_energy = true;
                t.energy = to_double(val, where);
            } else if (key == "c_e") {
                t.has_c_e = true;
                t.c_e = to_double(val, where);
            } else if (key == "k")
                t.k = to_int(val, where);
            else if (key == "rho")
                t.rho = to_double(val, where);
            else if (key == "levels")
                t.levels = to_list(val, where);
            else if (key == "samples")
                t.samples = to_int(val, where);
            else if (key == "window")
                t.window = to_double(val, where);
            else
                throw ConfigError(where + ": unknown key '" + key + "' in [two_ring]");
        } else {
            throw ConfigError(where + ": key outside any section");
        }
    }
    if (!cfg.sim.rings.empty() || !cfg.sim.eps_list.empty())
        validate_sim(cfg.sim);
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void validate_sim(const SimConfig& cfg) {
    if (cfg.rings.empty())
        throw ConfigError("config: no [ring] sections");
    if (cfg.eps_list.empty())
        throw ConfigError("config: eps_list is required");
    for (size_t i = 0; i < cfg.eps_list.size(); ++i) {
        if (!(cfg.eps_list[i] > 0.0) || !(cfg.eps_list[i] < 1.0))
            throw ConfigError("config: every eps must lie in (0,1)");
        if (i > 0 && !(cfg.eps_list[i] < cfg.eps_list[i - 1]))
            throw ConfigError("config: eps_list must be strictly decreasing");
    }
    if (!(cfg.alpha > 0.0))
        throw ConfigError("config: alpha must be positive");
    if (cfg.n_side < 2)
        throw ConfigError("config: n_side must be at least 2");
    if (!(cfg.t_end > 0.0))
        throw ConfigError("config: t_end must be positive");
    if (!(cfg.tail_radius > 0.0))
        throw ConfigError("config: tail_radius must be positive");
    if (cfg.diag_stride < 1)
        throw ConfigError("config: diag_stride must be at least 1");
    if (!cfg.dt_auto && !(cfg.dt > 0.0))
        throw ConfigError("config: dt must be positive or 'auto'");
    for (const auto& r : cfg.rings)
        if (r.intensity == 0.0)
            throw ConfigError("config: ring intensity must be nonzero");
    // geometric admissibility for every eps of the sweep
    for (double eps : cfg.eps_list) {
        const double r_eps = cfg.alpha * std::fabs(std::log(eps));
        for (size_t i = 0; i < cfg.rings.size(); ++i) {
            const double ri = cfg.rings[i].patch_radius > 0.0 ? cfg.rings[i].patch_radius : eps;
            if (!(r_eps + cfg.rings[i].center.y() - ri > 0.0))
                throw ConfigError("config: ring patch leaves the half-plane "
                                  "r_eps + x2 > 0 at eps = " + std::to_string(eps));
            for (size_t j = i + 1; j < cfg.rings.size(); ++j) {
                const double rj = cfg.rings[j].patch_radius > 0.0 ? cfg.rings[j].patch_radius : eps;
                if ((cfg.rings[i].center - cfg.rings[j].center).norm() <= ri + rj)
                    throw ConfigError("config: ring patches overlap at eps = " +
                                      std::to_string(eps));
            }
        }
    }
}

} // namespace vring
