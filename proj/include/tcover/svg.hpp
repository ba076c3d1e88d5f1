#pragma once

#include <string>

#include "tcover/cover.hpp"
#include "tcover/curve_graph.hpp"
#include "tcover/image.hpp"
#include "tcover/path.hpp"
#include "tcover/trace.hpp"

namespace tcover {

/// Foreground pixels as grey unit squares, junction pixels in red, each
/// traced path as a polyline through pixel centres.
std::string trace_svg(const BinaryImage& image, const std::vector<TraceResult>& results);

/// Left: the path with every saturated segment drawn in its own colour.
/// Right: the same segments as arcs on the unit circle, point k at angle
/// 2*pi*k/(n+1), nested by radius so overlaps stay visible.
std::string cover_svg(const DigitalPath& path, const SaturatedCover& cover);

}  // namespace tcover
