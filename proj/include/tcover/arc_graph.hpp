#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcover/cover.hpp"
#include "tcover/path.hpp"

namespace tcover {

/// Exact fraction of a full turn, reduced, 0 <= num < den.
struct Turn {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Turn&, const Turn&) = default;
};

/// Angle of point k on a path with max index n: k / (n + 1) of a turn.
Turn phi(std::size_t k, std::size_t n);

/// Image of a sub-path on the circle: the positive arc from its first to
/// its last point. Angles share the denominator `points`, so comparisons are
/// done on the index numerators.
struct CircularArc {
    IndexInterval source;
    std::size_t points = 0;  ///< n + 1

    Turn start_angle() const;
    Turn end_angle() const;
    /// Angular length in index units (len - 1).
    std::size_t span() const { return source.len - 1; }
};

/// Closed-arc semantics: arcs meeting at a single index intersect.
bool arcs_intersect(const CircularArc& a, const CircularArc& b, bool closed);
/// inner lies within outer (as arcs; on open paths as intervals). A full
/// turn covers the whole circle.
bool arc_contains(const CircularArc& outer, const CircularArc& inner, bool closed);

struct ArcGraph {
    std::size_t points = 0;
    std::vector<CircularArc> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< u < v, sorted
    bool proper = true;    ///< no arc contains another
    bool interval = false; ///< built from an open path
};

ArcGraph build_arc_graph(const SaturatedCover& cover);
/// Same construction from raw intervals, e.g. to exercise the proper check.
ArcGraph build_arc_graph(const std::vector<IndexInterval>& intervals, std::size_t points, bool closed);

/// `{"nodes": [{"start": i, "len": k}], "edges": [[u,v]], "proper": true, "interval": false}`
std::string arc_graph_to_json(const ArcGraph& graph);
std::string arc_graph_to_dot(const ArcGraph& graph);

}  // namespace tcover
