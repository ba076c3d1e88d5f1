#pragma once

#include <cstddef>
#include <vector>

#include "tcover/curve_graph.hpp"
#include "tcover/image.hpp"
#include "tcover/path.hpp"

namespace tcover {

/// Where one tour step's edge pixels landed in the emitted path:
/// points[begin, begin + length) are the edge pixels in traversal order.
struct EdgeRun {
    std::size_t edge = 0;
    bool forward = true;
    std::size_t begin = 0;
    std::size_t length = 0;
};

struct EmittedPath {
    DigitalPath path;
    std::vector<EdgeRun> runs;  ///< one per tour step, in tour order
};

/// Concatenates the edge pixel lists along the tour. At the first visit of a
/// junction the route between the incoming and outgoing attachment pixels
/// walks a spanning tree of the junction so that all its pixels appear;
/// later visits take a shortest route inside the junction. The result is
/// closed when the tour returns to its start. Consecutive duplicates at
/// seams are dropped. Throws std::logic_error (with coordinates) if a seam
/// cannot be joined.
EmittedPath emit_path(const CurveGraph& graph, const std::vector<TourStep>& tour, std::size_t start);

struct TraceOptions {
    Adjacency adjacency = Adjacency::Eight;
    /// Always close the route by duplicating edges, even when an open Euler
    /// trail between two odd vertices exists.
    bool cpp_always = false;
};

struct TraceResult {
    CurveGraph graph;    ///< as built from the image
    CurveGraph toured;   ///< the multigraph the tour covers (with duplicates if any)
    std::size_t start = 0;
    std::vector<TourStep> tour;
    EmittedPath emitted;
};

/// Full pipeline for one connected component. With exactly two odd vertices
/// (and !cpp_always) the tour is an open Euler trail from the smaller one;
/// otherwise the graph is eulerized and the tour closed, starting at vertex 0.
TraceResult trace_component(const BinaryImage& component, const TraceOptions& options);

/// One result per connected component, in split_components() order.
std::vector<TraceResult> trace_image(const BinaryImage& image, const TraceOptions& options);

}  // namespace tcover
