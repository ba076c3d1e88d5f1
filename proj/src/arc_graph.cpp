#include "tcover/arc_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcover {

namespace {

Turn reduced(std::int64_t num, std::int64_t den) {
    num %= den;
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

// Offset of index b after index a going positively.
std::size_t forward_offset(std::size_t a, std::size_t b, std::size_t points) { return (b + points - a) % points; }

}  // namespace

Turn phi(std::size_t k, std::size_t n) {
    if (k > n) throw std::out_of_range("phi: index beyond the path");
    return reduced(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n + 1));
}

Turn CircularArc::start_angle() const {
    return reduced(static_cast<std::int64_t>(source.start), static_cast<std::int64_t>(points));
}

Turn CircularArc::end_angle() const {
    return reduced(static_cast<std::int64_t>(source.start + source.len - 1), static_cast<std::int64_t>(points));
}

bool arcs_intersect(const CircularArc& a, const CircularArc& b, bool closed) {
    if (!closed) {
        const std::size_t lo = std::max(a.source.start, b.source.start);
        const std::size_t hi = std::min(a.source.start + a.span(), b.source.start + b.span());
        return lo <= hi;
    }
    // Two arcs meet iff one of them starts inside the other.
    return forward_offset(a.source.start, b.source.start, a.points) <= a.span() ||
           forward_offset(b.source.start, a.source.start, a.points) <= b.span();
}

bool arc_contains(const CircularArc& outer, const CircularArc& inner, bool closed) {
    if (!closed) {
        return inner.source.start >= outer.source.start &&
               inner.source.start + inner.span() <= outer.source.start + outer.span();
    }
    if (outer.source.len == outer.points) return true;
    if (inner.source.len == inner.points) return false;
    const std::size_t offset = forward_offset(outer.source.start, inner.source.start, outer.points);
    return offset + inner.span() <= outer.span();
}

ArcGraph build_arc_graph(const std::vector<IndexInterval>& intervals, std::size_t points, bool closed) {
    ArcGraph graph;
    graph.points = points;
    graph.interval = !closed;
    for (const auto& iv : intervals) {
        if (!is_valid_interval(iv, points, closed)) throw std::invalid_argument("build_arc_graph: invalid interval " + to_string(iv));
        graph.nodes.push_back({iv, points});
    }

    // Visit nodes by start; the arcs starting inside arc i follow it in
    // (cyclic) start order, so each walk stops at the first one that doesn't.
    const std::size_t m = graph.nodes.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return graph.nodes[a].source.start < graph.nodes[b].source.start;
    });

    for (std::size_t pos = 0; pos < m; ++pos) {
        const std::size_t i = order[pos];
        const CircularArc& arc = graph.nodes[i];
        const std::size_t steps = closed ? m - 1 : m - 1 - pos;
        for (std::size_t step = 1; step <= steps; ++step) {
            const std::size_t j = order[(pos + step) % m];
            const CircularArc& other = graph.nodes[j];
            const std::size_t offset = closed ? forward_offset(arc.source.start, other.source.start, points)
                                              : other.source.start - arc.source.start;
            if (offset > arc.span()) break;
            graph.edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());

    // Containment implies intersection, so only edges need checking.
    for (const auto& [u, v] : graph.edges) {
        if (arc_contains(graph.nodes[u], graph.nodes[v], closed) || arc_contains(graph.nodes[v], graph.nodes[u], closed)) {
            graph.proper = false;
            break;
        }
    }
    return graph;
}

ArcGraph build_arc_graph(const SaturatedCover& cover) {
    return build_arc_graph(cover.segments, cover.points, cover.closed);
}

std::string arc_graph_to_json(const ArcGraph& graph) {
    std::string out = "{\"nodes\": [";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        if (i) out += ", ";
        out += "{\"start\": " + std::to_string(graph.nodes[i].source.start) +
               ", \"len\": " + std::to_string(graph.nodes[i].source.len) + "}";
    }
    out += "], \"edges\": [";
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        if (i) out += ", ";
        out += "[" + std::to_string(graph.edges[i].first) + "," + std::to_string(graph.edges[i].second) + "]";
    }
    out += "], \"proper\": ";
    out += graph.proper ? "true" : "false";
    out += ", \"interval\": ";
    out += graph.interval ? "true" : "false";
    out += "}";
    return out;
}

std::string arc_graph_to_dot(const ArcGraph& graph) {
    std::ostringstream os;
    os << "graph arcs {\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& s = graph.nodes[i].source;
        os << "  n" << i << " [label=\"" << s.start << "+" << s.len << "\"];\n";
    }
    for (const auto& [u, v] : graph.edges) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tcover
