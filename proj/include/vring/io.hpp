/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * CSV and SVG emitters. All numeric text uses 17 significant digits, LF
 * line endings and UTF-8, so identical data yields identical bytes.
 *
 ******************************************************************************/

#ifndef VRING_IO_HPP
#define VRING_IO_HPP

#include <string>
#include <vector>

#include "vring/blob.hpp"
#include "vring/reduced.hpp"
#include "vring/types.hpp"

namespace vring {

/// %.17g rendering used for every CSV cell.
std::string format_value(double v);

/// Generic table: one header row, then one row per record.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Diagnostics frames for an n-ring run.
void write_frames_csv(const std::string& path,
                      const std::vector<DiagnosticsFrame>& frames, int n_rings);

/// Reduced trajectory; one position pair per center.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// A named polyline for SVG plotting (y is flipped so +x2 points up).
struct PlotCurve {
    std::string label;
    std::vector<Vec2> points;
};

/// Standalone SVG document: one polyline per curve, the label stored in a
/// data-level attribute, viewBox from the data bounds plus a 5% margin.
void write_svg(const std::string& path, const std::vector<PlotCurve>& curves);

} // namespace vring

#endif
