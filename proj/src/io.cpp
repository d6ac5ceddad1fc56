/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * CSV and SVG output.
 *
 ******************************************************************************/

#include "vring/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "vring/errors.hpp"

namespace vring {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary: LF on every platform
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    auto out = open_out(path);
    for (size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_value(row[i]);
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

void write_frames_csv(const std::string& path,
                      const std::vector<DiagnosticsFrame>& frames, int n_rings) {
    std::vector<std::string> header{"t"};
    for (int i = 1; i <= n_rings; ++i) {
        const std::string s = std::to_string(i);
        header.push_back("B" + s + "_x");
        header.push_back("B" + s + "_y");
        header.push_back("J" + s);
        header.push_back("tail" + s);
        header.push_back("circ" + s);
        header.push_back("E" + s);
    }
    for (int i = 1; i <= n_rings; ++i)
        for (int j = i + 1; j <= n_rings; ++j)
            header.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
    header.push_back("E_total");
    header.push_back("E_reg");

    std::vector<std::vector<double>> rows;
    rows.reserve(frames.size());
    for (const auto& f : frames) {
        std::vector<double> row{f.time};
        for (int i = 0; i < n_rings; ++i) {
            row.push_back(f.centers[i].x());
            row.push_back(f.centers[i].y());
            row.push_back(f.inertia[i]);
            row.push_back(f.tail_mass[i]);
            row.push_back(f.circulation[i]);
            row.push_back(f.self_energy[i]);
        }
        for (double e : f.cross_energy)
            row.push_back(e);
        row.push_back(f.total_energy);
        row.push_back(f.regularized_energy);
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    const int n = traj.states.empty() ? 0 : traj.states.front().size();
    std::vector<std::string> header{"t"};
    for (int i = 1; i <= n; ++i) {
        header.push_back("zeta" + std::to_string(i) + "_x");
        header.push_back("zeta" + std::to_string(i) + "_y");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.times.size());
    for (size_t k = 0; k < traj.times.size(); ++k) {
        std::vector<double> row{traj.times[k]};
        for (int i = 0; i < n; ++i) {
            row.push_back(traj.states[k].centers[i].x());
            row.push_back(traj.states[k].centers[i].y());
        }
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

void write_svg(const std::string& path, const std::vector<PlotCurve>& curves) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            xmin = std::min(xmin, p.x());
            xmax = std::max(xmax, p.x());
            ymin = std::min(ymin, p.y());
            ymax = std::max(ymax, p.y());
        }
    if (!(xmin <= xmax)) { // no data
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double mx = 0.05 * std::max(xmax - xmin, 1e-12);
    const double my = 0.05 * std::max(ymax - ymin, 1e-12);
    xmin -= mx;
    xmax += mx;
    ymin -= my;
    ymax += my;
    const double w = xmax - xmin;
    const double h = ymax - ymin;
    const double stroke = 0.004 * std::max(w, h);

    auto out = open_out(path);
    // y axis points up in the data; emit flipped y so SVG renders it upright
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_value(xmin) << " " << format_value(-ymax) << " "
        << format_value(w) << " " << format_value(h) << "\">\n";
    int idx = 0;
    for (const auto& c : curves) {
        out << "  <polyline data-level=\"" << c.label << "\" fill=\"none\" stroke=\""
            << kPalette[idx % 8] << "\" stroke-width=\"" << format_value(stroke)
            << "\" points=\"";
        for (size_t k = 0; k < c.points.size(); ++k) {
            if (k)
                out << " ";
            out << format_value(c.points[k].x()) << "," << format_value(-c.points[k].y());
        }
        out << "\"/>\n";
        ++idx;
    }
    out << "</svg>\n";
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace vring
