#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcover/image.hpp"
#include "tcover/path.hpp"

namespace tcover {

enum class PixelKind { Isolated, End, Regular, Branching };

struct PixelClass {
    PixelKind kind = PixelKind::Isolated;
    int branching_index = 0;
};

/// Number of foreground pixels in the alpha-neighbourhood of p. Throws
/// std::invalid_argument if p is not foreground.
int branching_index(const BinaryImage& image, const GridPoint& p, Adjacency adjacency);

/// Index 0 Isolated, 1 End, 2 Regular, 3+ Branching.
PixelClass classify(const BinaryImage& image, const GridPoint& p, Adjacency adjacency);

struct Junction {
    std::vector<GridPoint> pixels;  ///< sorted
    /// Non-branching (end or regular) pixels adjacent to the junction.
    int branching_index = 0;
};

/// alpha-components of the Branching pixels, ordered by smallest pixel.
std::vector<Junction> find_junctions(const BinaryImage& image, Adjacency adjacency);

enum class VertexKind { End, Junction, Cycle, Isolated };

std::string vertex_kind_name(VertexKind kind);

struct CurveVertex {
    VertexKind kind = VertexKind::End;
    std::vector<GridPoint> pixels;  ///< sorted
};

/// Simple open curve between two vertices. `pixels` runs from the u side to
/// the v side; the first pixel is adjacent to `u_attach` and the last to
/// `v_attach`, both pixels of the respective vertex. End points adjacent
/// to a junction or to each other are joined by an edge with no pixels.
struct CurveEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::vector<GridPoint> pixels;
    GridPoint u_attach;
    GridPoint v_attach;
    /// Set on copies added by eulerize().
    std::optional<std::size_t> duplicate_of;

    /// Cost of retracing the edge: its pixels plus the two attachment steps.
    std::int64_t weight() const { return static_cast<std::int64_t>(pixels.size()) + 2; }
};

struct CurveGraph {
    Adjacency adjacency = Adjacency::Eight;
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;

    /// Self-loops count twice.
    std::size_t degree(std::size_t vertex) const;
    std::vector<std::size_t> odd_vertices() const;
    std::int64_t duplicated_weight() const;
};

/// Curve graph of a single alpha-connected component. Vertices are end
/// points, junctions, a synthetic vertex holding the smallest pixel of a
/// junction-free closed curve, or the lone pixel of an isolated point.
/// Vertices are ordered by smallest pixel, edges by (u, v, pixels). Throws
/// InputError on multi-component images or unsupported adjacency.
CurveGraph build_curve_graph(const BinaryImage& image, Adjacency adjacency);

inline constexpr std::size_t kMaxOddVertices = 20;

/// Chinese Postman: duplicates edges along shortest paths so that a
/// minimum-weight perfect matching of the odd vertices becomes even.
/// Exact matching by subset dynamic programming; throws CapacityError with
/// more than kMaxOddVertices odd vertices and InputError when disconnected.
CurveGraph eulerize(const CurveGraph& graph);

/// One edge traversal; `forward` walks pixels from u to v.
struct TourStep {
    std::size_t edge = 0;
    bool forward = true;

    friend bool operator==(const TourStep&, const TourStep&) = default;
};

/// Vertex a step leaves from / arrives at.
std::size_t step_from(const CurveGraph& graph, const TourStep& step);
std::size_t step_to(const CurveGraph& graph, const TourStep& step);

/// Hierholzer's cycle splicing from `start`, taking incident edges in edge
/// order. A closed tour needs all degrees even; an open trail needs exactly
/// two odd vertices with `start` one of them. Throws std::invalid_argument
/// otherwise or when some edge is unreachable.
std::vector<TourStep> euler_tour(const CurveGraph& graph, std::size_t start);

/// `{"vertices": [{"kind": "end", "pixels": [[x,y]]}], "edges": [{"u": 0, "v": 1, "pixels": [...]}]}`
std::string curve_graph_to_json(const CurveGraph& graph);

}  // namespace tcover
