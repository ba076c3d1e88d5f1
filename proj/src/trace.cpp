#include "tcover/trace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tcover {

namespace {

class JunctionWalker {
  public:
    JunctionWalker(const std::vector<GridPoint>& pixels, Adjacency adjacency) : pixels_(pixels), adjacency_(adjacency) {}

    /// Breadth-first tree from `root`: parent links and children in
    /// discovery order.
    void grow_tree(const GridPoint& root) {
        parent_.clear();
        children_.clear();
        parent_[root] = root;
        std::deque<GridPoint> queue{root};
        while (!queue.empty()) {
            const GridPoint p = queue.front();
            queue.pop_front();
            for (const auto& q : neighbourhood(p, adjacency_)) {
                if (!member(q) || parent_.count(q)) continue;
                parent_[q] = p;
                children_[p].push_back(q);
                queue.push_back(q);
            }
        }
    }

    std::vector<GridPoint> shortest(const GridPoint& from, const GridPoint& to) {
        grow_tree(from);
        std::vector<GridPoint> route{to};
        while (route.back() != from) route.push_back(parent_.at(route.back()));
        std::reverse(route.begin(), route.end());
        return route;
    }

    /// Depth-first walk of the tree from `from` that returns from every
    /// subtree except the one holding `to`, which is entered last.
    std::vector<GridPoint> covering(const GridPoint& from, const GridPoint& to) {
        grow_tree(from);
        std::map<GridPoint, bool> on_route;
        for (GridPoint p = to;; p = parent_.at(p)) {
            on_route[p] = true;
            if (p == from) break;
        }
        for (auto& [node, kids] : children_) {
            std::stable_partition(kids.begin(), kids.end(), [&](const GridPoint& c) { return !on_route.count(c); });
        }

        struct Frame {
            GridPoint node;
            std::size_t next;
        };
        std::vector<GridPoint> walk{from};
        std::vector<Frame> stack{{from, 0}};
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto it = children_.find(frame.node);
            if (it != children_.end() && frame.next < it->second.size()) {
                const GridPoint child = it->second[frame.next++];
                if (on_route.count(child)) stack.pop_back();
                walk.push_back(child);
                stack.push_back({child, 0});
            } else {
                stack.pop_back();
                if (!stack.empty()) walk.push_back(stack.back().node);
            }
        }
        return walk;
    }

  private:
    bool member(const GridPoint& p) const { return std::binary_search(pixels_.begin(), pixels_.end(), p); }

    const std::vector<GridPoint>& pixels_;
    Adjacency adjacency_;
    std::map<GridPoint, GridPoint> parent_;
    std::map<GridPoint, std::vector<GridPoint>> children_;
};

class PathBuilder {
  public:
    PathBuilder(const CurveGraph& graph, DigitalPath& path)
        : graph_(graph), path_(path), visited_(graph.vertices.size(), false) {}

    void emit(const GridPoint& p) {
        auto& pts = path_.points;
        if (!pts.empty() && pts.back() == p) return;
        if (!pts.empty() && !is_adjacent(pts.back(), p, graph_.adjacency)) {
            throw std::logic_error("emit_path: cannot join " + to_string(pts.back()) + " to " + to_string(p));
        }
        pts.push_back(p);
    }

    /// Moves inside a vertex from one of its pixels to another.
    void cross(std::size_t vertex, const GridPoint& from, const GridPoint& to) {
        const auto& pixels = graph_.vertices[vertex].pixels;
        if (pixels.size() == 1) {
            emit(from);
        } else {
            JunctionWalker walker(pixels, graph_.adjacency);
            for (const auto& p : visited_[vertex] ? walker.shortest(from, to) : walker.covering(from, to)) emit(p);
        }
        visited_[vertex] = true;
    }

  private:
    const CurveGraph& graph_;
    DigitalPath& path_;
    std::vector<bool> visited_;
};

}  // namespace

EmittedPath emit_path(const CurveGraph& graph, const std::vector<TourStep>& tour, std::size_t start) {
    EmittedPath out;
    out.path.adjacency = graph.adjacency;
    if (start >= graph.vertices.size()) throw std::invalid_argument("emit_path: no such start vertex");
    if (tour.empty()) {
        if (!graph.edges.empty()) throw std::invalid_argument("emit_path: empty tour on a graph with edges");
        // A lone vertex; a junction with no branches is walked round and closed.
        const auto& pixels = graph.vertices[start].pixels;
        PathBuilder builder(graph, out.path);
        builder.cross(start, pixels.front(), pixels.front());
        if (out.path.points.size() > 1) {
            out.path.points.pop_back();
            out.path.closed = out.path.points.size() > 1;
        }
        return out;
    }
    if (step_from(graph, tour.front()) != start) throw std::invalid_argument("emit_path: tour does not leave from start");

    PathBuilder builder(graph, out.path);
    GridPoint arrived{};
    GridPoint first{};
    for (std::size_t i = 0; i < tour.size(); ++i) {
        const TourStep& step = tour[i];
        const auto& edge = graph.edges.at(step.edge);
        const std::size_t from = step_from(graph, step);
        const GridPoint depart = step.forward ? edge.u_attach : edge.v_attach;
        if (i == 0) {
            first = depart;
            builder.cross(from, depart, depart);
        } else {
            if (from != step_to(graph, tour[i - 1])) throw std::invalid_argument("emit_path: tour steps do not chain");
            builder.cross(from, arrived, depart);
        }

        EdgeRun run{step.edge, step.forward, out.path.size(), edge.pixels.size()};
        if (step.forward) {
            for (const auto& p : edge.pixels) builder.emit(p);
        } else {
            for (auto it = edge.pixels.rbegin(); it != edge.pixels.rend(); ++it) builder.emit(*it);
        }
        out.runs.push_back(run);
        arrived = step.forward ? edge.v_attach : edge.u_attach;
    }

    const std::size_t end = step_to(graph, tour.back());
    if (end == start) {
        builder.cross(end, arrived, first);
        if (out.path.points.size() > 1 && out.path.points.back() == out.path.points.front()) out.path.points.pop_back();
        out.path.closed = out.path.points.size() > 1;
    } else {
        builder.cross(end, arrived, arrived);
    }
    return out;
}

TraceResult trace_component(const BinaryImage& component, const TraceOptions& options) {
    TraceResult result;
    result.graph = build_curve_graph(component, options.adjacency);
    if (result.graph.vertices.empty()) throw std::invalid_argument("trace_component: empty image");
    const auto odd = result.graph.odd_vertices();
    if (odd.size() == 2 && !options.cpp_always) {
        result.toured = result.graph;
        result.start = odd.front();
    } else {
        result.toured = eulerize(result.graph);
        result.start = 0;
    }
    if (!result.toured.edges.empty()) result.tour = euler_tour(result.toured, result.start);
    result.emitted = emit_path(result.toured, result.tour, result.start);
    return result;
}

std::vector<TraceResult> trace_image(const BinaryImage& image, const TraceOptions& options) {
    std::vector<TraceResult> results;
    for (const auto& component : split_components(image, options.adjacency)) {
        results.push_back(trace_component(component, options));
    }
    return results;
}

}  // namespace tcover
