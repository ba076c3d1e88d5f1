#include "tcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tcover {

namespace {

constexpr double kCell = 10.0;

std::string colour(std::size_t i) {
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[i % std::size(palette)];
}

std::string polyline(const std::vector<GridPoint>& pts, bool closed, double scale, double ox, double oy) {
    std::ostringstream os;
    os << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << ox + (static_cast<double>(pts[i].x) + 0.5) * scale << ',' << oy + (static_cast<double>(pts[i].y) + 0.5) * scale;
    }
    os << "\" fill=\"none\"";
    return os.str();
}

}  // namespace

std::string trace_svg(const BinaryImage& image, const std::vector<TraceResult>& results) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << image.width() * kCell << "\" height=\""
       << image.height() * kCell << "\">\n";
    for (const auto& p : image.foreground()) {
        os << "<rect x=\"" << p.x * kCell << "\" y=\"" << p.y * kCell << "\" width=\"" << kCell << "\" height=\"" << kCell
           << "\" fill=\"#cccccc\"/>\n";
    }
    for (const auto& result : results) {
        for (const auto& v : result.graph.vertices) {
            if (v.kind != VertexKind::Junction) continue;
            for (const auto& p : v.pixels) {
                os << "<rect x=\"" << p.x * kCell << "\" y=\"" << p.y * kCell << "\" width=\"" << kCell
                   << "\" height=\"" << kCell << "\" fill=\"#e06060\"/>\n";
            }
        }
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& path = results[i].emitted.path;
        if (path.size() == 1) {
            os << "<circle cx=\"" << (static_cast<double>(path[0].x) + 0.5) * kCell << "\" cy=\""
               << (static_cast<double>(path[0].y) + 0.5) * kCell << "\" r=\"2\" fill=\"" << colour(i) << "\"/>\n";
        } else if (!path.points.empty()) {
            os << polyline(path.points, path.closed, kCell, 0, 0) << " stroke=\"" << colour(i) << "\" stroke-width=\"2\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string cover_svg(const DigitalPath& path, const SaturatedCover& cover) {
    if (path.points.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n";
    std::int64_t xmin = path[0].x, xmax = path[0].x, ymin = path[0].y, ymax = path[0].y;
    for (const auto& p : path.points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double side = 400.0;
    const double extent = static_cast<double>(std::max(xmax - xmin, ymax - ymin) + 1);
    const double scale = side / extent;
    const double ox = -static_cast<double>(xmin) * scale;
    const double oy = -static_cast<double>(ymin) * scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * side + 40 << "\" height=\"" << side << "\">\n";
    os << polyline(path.points, path.closed, scale, ox, oy) << " stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    const std::size_t n = path.size();
    for (std::size_t s = 0; s < cover.segments.size(); ++s) {
        std::vector<GridPoint> pts;
        for (std::size_t k = 0; k < cover.segments[s].len; ++k) pts.push_back(path.at_wrapped(cover.segments[s].start + k));
        os << polyline(pts, false, scale, ox, oy) << " stroke=\"" << colour(s) << "\" stroke-opacity=\"0.6\" stroke-width=\"2\"/>\n";
    }

    const double cx = side + 40 + side / 2;
    const double cy = side / 2;
    const double outer = side / 2 - 10;
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << outer << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    const std::size_t rings = std::max<std::size_t>(1, std::min<std::size_t>(cover.segments.size(), 8));
    for (std::size_t s = 0; s < cover.segments.size(); ++s) {
        const double r = outer * (1.0 - 0.5 * static_cast<double>(s % rings) / static_cast<double>(rings));
        const double a0 = 2 * std::numbers::pi * static_cast<double>(cover.segments[s].start) / static_cast<double>(n);
        const double a1 = 2 * std::numbers::pi * static_cast<double>(cover.segments[s].start + cover.segments[s].len - 1) /
                          static_cast<double>(n);
        const bool large = a1 - a0 > std::numbers::pi;
        os << "<path d=\"M " << cx + r * std::cos(a0) << ' ' << cy + r * std::sin(a0) << " A " << r << ' ' << r << " 0 "
           << (large ? 1 : 0) << " 1 " << cx + r * std::cos(a1) << ' ' << cy + r * std::sin(a1) << "\" fill=\"none\" stroke=\""
           << colour(s) << "\" stroke-width=\"3\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tcover
