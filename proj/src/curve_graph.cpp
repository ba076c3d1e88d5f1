#include "tcover/curve_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "tcover/error.hpp"
#include "tcover/path_json.hpp"

namespace tcover {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Per-pixel value over the image rectangle.
template <typename T>
class PixelMap {
  public:
    PixelMap(const BinaryImage& image, T fill)
        : width_(image.width()), values_(static_cast<std::size_t>(image.width() * image.height()), fill) {}

    T& operator[](const GridPoint& p) { return values_[static_cast<std::size_t>(p.y * width_ + p.x)]; }
    const T& operator[](const GridPoint& p) const { return values_[static_cast<std::size_t>(p.y * width_ + p.x)]; }

  private:
    std::int64_t width_;
    std::vector<T> values_;
};

std::vector<GridPoint> foreground_neighbours(const BinaryImage& image, const GridPoint& p, Adjacency adjacency) {
    std::vector<GridPoint> out;
    for (const auto& q : neighbourhood(p, adjacency)) {
        if (image.contains(q)) out.push_back(q);
    }
    return out;
}

/// alpha-components of the pixels accepted by `keep`, each sorted, ordered
/// by smallest pixel.
template <typename Keep>
std::vector<std::vector<GridPoint>> components_of(const BinaryImage& image, Adjacency adjacency, Keep keep) {
    std::vector<std::vector<GridPoint>> out;
    PixelMap<char> seen(image, 0);
    for (const auto& seed : image.foreground()) {
        if (seen[seed] || !keep(seed)) continue;
        std::vector<GridPoint> component;
        std::deque<GridPoint> queue{seed};
        seen[seed] = true;
        while (!queue.empty()) {
            const GridPoint p = queue.front();
            queue.pop_front();
            component.push_back(p);
            for (const auto& q : foreground_neighbours(image, p, adjacency)) {
                if (!seen[q] && keep(q)) {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

void orient(CurveEdge& edge) {
    auto flip = [&] {
        std::swap(edge.u, edge.v);
        std::swap(edge.u_attach, edge.v_attach);
        std::reverse(edge.pixels.begin(), edge.pixels.end());
    };
    if (edge.u > edge.v) {
        flip();
    } else if (edge.u == edge.v) {
        if (edge.v_attach < edge.u_attach ||
            (edge.v_attach == edge.u_attach && !edge.pixels.empty() && edge.pixels.back() < edge.pixels.front())) {
            flip();
        }
    }
}

}  // namespace

int branching_index(const BinaryImage& image, const GridPoint& p, Adjacency adjacency) {
    if (!image.contains(p)) throw std::invalid_argument("branching_index: " + to_string(p) + " is not foreground");
    return static_cast<int>(foreground_neighbours(image, p, adjacency).size());
}

PixelClass classify(const BinaryImage& image, const GridPoint& p, Adjacency adjacency) {
    const int index = branching_index(image, p, adjacency);
    switch (index) {
        case 0: return {PixelKind::Isolated, 0};
        case 1: return {PixelKind::End, 1};
        case 2: return {PixelKind::Regular, 2};
        default: return {PixelKind::Branching, index};
    }
}

std::vector<Junction> find_junctions(const BinaryImage& image, Adjacency adjacency) {
    PixelMap<char> branching(image, 0);
    for (const auto& p : image.foreground()) branching[p] = classify(image, p, adjacency).kind == PixelKind::Branching;

    std::vector<Junction> junctions;
    for (auto& pixels : components_of(image, adjacency, [&](const GridPoint& p) { return branching[p]; })) {
        std::vector<GridPoint> around;
        for (const auto& p : pixels) {
            for (const auto& q : foreground_neighbours(image, p, adjacency)) {
                if (!branching[q]) around.push_back(q);
            }
        }
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        junctions.push_back({std::move(pixels), static_cast<int>(around.size())});
    }
    return junctions;
}

std::string vertex_kind_name(VertexKind kind) {
    switch (kind) {
        case VertexKind::End: return "end";
        case VertexKind::Junction: return "junction";
        case VertexKind::Cycle: return "cycle";
        case VertexKind::Isolated: return "isolated";
    }
    return "?";
}

std::size_t CurveGraph::degree(std::size_t vertex) const {
    std::size_t d = 0;
    for (const auto& e : edges) {
        if (e.u == vertex) ++d;
        if (e.v == vertex) ++d;
    }
    return d;
}

std::vector<std::size_t> CurveGraph::odd_vertices() const {
    std::vector<std::size_t> degrees(vertices.size(), 0);
    for (const auto& e : edges) {
        ++degrees[e.u];
        ++degrees[e.v];
    }
    std::vector<std::size_t> odd;
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        if (degrees[v] % 2) odd.push_back(v);
    }
    return odd;
}

std::int64_t CurveGraph::duplicated_weight() const {
    std::int64_t total = 0;
    for (const auto& e : edges) {
        if (e.duplicate_of) total += e.weight();
    }
    return total;
}

CurveGraph build_curve_graph(const BinaryImage& image, Adjacency adjacency) {
    if (adjacency == Adjacency::IndexOnly) throw InputError("tracing needs adjacency 4 or 8");
    CurveGraph graph;
    graph.adjacency = adjacency;
    const auto foreground = image.foreground();
    if (foreground.empty()) return graph;
    if (split_components(image, adjacency).size() > 1) {
        throw InputError("build_curve_graph: image has more than one connected component");
    }

    PixelMap<PixelKind> kind(image, PixelKind::Isolated);
    for (const auto& p : foreground) kind[p] = classify(image, p, adjacency).kind;

    if (foreground.size() == 1) {
        graph.vertices.push_back({VertexKind::Isolated, foreground});
        return graph;
    }

    for (const auto& p : foreground) {
        if (kind[p] == PixelKind::End) graph.vertices.push_back({VertexKind::End, {p}});
    }
    for (auto& j : find_junctions(image, adjacency)) graph.vertices.push_back({VertexKind::Junction, std::move(j.pixels)});

    auto regular_runs = components_of(image, adjacency, [&](const GridPoint& p) { return kind[p] == PixelKind::Regular; });

    // A run whose pixels all have two neighbours inside it is a closed curve
    // making up the whole component.
    PixelMap<std::size_t> run_of(image, kNone);
    for (std::size_t r = 0; r < regular_runs.size(); ++r) {
        for (const auto& p : regular_runs[r]) run_of[p] = r;
    }
    auto inside_neighbours = [&](const GridPoint& p, std::size_t r) {
        std::vector<GridPoint> out;
        for (const auto& q : foreground_neighbours(image, p, adjacency)) {
            if (run_of[q] == r) out.push_back(q);
        }
        return out;
    };

    if (graph.vertices.empty()) {
        const auto& ring = regular_runs.front();
        const GridPoint anchor = ring.front();
        graph.vertices.push_back({VertexKind::Cycle, {anchor}});
        CurveEdge loop;
        GridPoint prev = anchor;
        GridPoint cur = inside_neighbours(anchor, 0).front();
        while (cur != anchor) {
            loop.pixels.push_back(cur);
            const auto next = inside_neighbours(cur, 0);
            const GridPoint step = next[0] == prev ? next[1] : next[0];
            prev = cur;
            cur = step;
        }
        loop.u_attach = loop.v_attach = anchor;
        orient(loop);
        graph.edges.push_back(std::move(loop));
        return graph;
    }

    std::sort(graph.vertices.begin(), graph.vertices.end(),
              [](const CurveVertex& a, const CurveVertex& b) { return a.pixels.front() < b.pixels.front(); });
    PixelMap<std::size_t> owner(image, kNone);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        for (const auto& p : graph.vertices[v].pixels) owner[p] = v;
    }

    for (std::size_t r = 0; r < regular_runs.size(); ++r) {
        const auto& run = regular_runs[r];
        GridPoint first = run.front();
        for (const auto& p : run) {
            if (inside_neighbours(p, r).size() <= 1) {
                first = p;
                break;
            }
        }
        CurveEdge edge;
        GridPoint prev = first;
        GridPoint cur = first;
        edge.pixels.push_back(first);
        for (;;) {
            std::optional<GridPoint> next;
            for (const auto& q : inside_neighbours(cur, r)) {
                if (q != prev) next = q;
            }
            if (!next || (edge.pixels.size() > 1 && *next == edge.pixels[edge.pixels.size() - 2])) break;
            prev = cur;
            cur = *next;
            edge.pixels.push_back(cur);
        }
        auto outside = [&](const GridPoint& p) {
            std::vector<GridPoint> out;
            for (const auto& q : foreground_neighbours(image, p, adjacency)) {
                if (run_of[q] != r) out.push_back(q);
            }
            return out;
        };
        const auto head = outside(edge.pixels.front());
        const auto tail = outside(edge.pixels.back());
        if (edge.pixels.size() == 1) {
            edge.u_attach = head.at(0);
            edge.v_attach = head.at(1);
        } else {
            edge.u_attach = head.at(0);
            edge.v_attach = tail.at(0);
        }
        edge.u = owner[edge.u_attach];
        edge.v = owner[edge.v_attach];
        orient(edge);
        graph.edges.push_back(std::move(edge));
    }

    // End points touching a junction or another end point directly.
    for (const auto& p : foreground) {
        if (kind[p] != PixelKind::End) continue;
        const GridPoint q = foreground_neighbours(image, p, adjacency).front();
        if (kind[q] == PixelKind::Branching || (kind[q] == PixelKind::End && p < q)) {
            CurveEdge edge;
            edge.u = owner[p];
            edge.v = owner[q];
            edge.u_attach = p;
            edge.v_attach = q;
            orient(edge);
            graph.edges.push_back(std::move(edge));
        }
    }

    std::sort(graph.edges.begin(), graph.edges.end(), [](const CurveEdge& a, const CurveEdge& b) {
        return std::tie(a.u, a.v, a.pixels, a.u_attach, a.v_attach) < std::tie(b.u, b.v, b.pixels, b.u_attach, b.v_attach);
    });
    return graph;
}

CurveGraph eulerize(const CurveGraph& graph) {
    CurveGraph out = graph;
    const auto odd = graph.odd_vertices();
    if (odd.empty()) return out;
    if (odd.size() > kMaxOddVertices) {
        throw CapacityError("eulerize: " + std::to_string(odd.size()) + " odd vertices exceeds the cap of " +
                            std::to_string(kMaxOddVertices));
    }

    const std::size_t nv = graph.vertices.size();
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        incident[graph.edges[e].u].push_back(e);
        if (graph.edges[e].v != graph.edges[e].u) incident[graph.edges[e].v].push_back(e);
    }

    // Shortest paths from every odd vertex.
    const std::size_t k = odd.size();
    std::vector<std::vector<std::int64_t>> dist(k, std::vector<std::int64_t>(nv, kUnreachable));
    std::vector<std::vector<std::size_t>> via(k, std::vector<std::size_t>(nv, kNone));
    for (std::size_t s = 0; s < k; ++s) {
        using Item = std::pair<std::int64_t, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[s][odd[s]] = 0;
        heap.push({0, odd[s]});
        while (!heap.empty()) {
            const auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[s][v]) continue;
            for (std::size_t e : incident[v]) {
                const auto& edge = graph.edges[e];
                const std::size_t w = edge.u == v ? edge.v : edge.u;
                const std::int64_t nd = d + edge.weight();
                if (nd < dist[s][w]) {
                    dist[s][w] = nd;
                    via[s][w] = e;
                    heap.push({nd, w});
                }
            }
        }
    }
    for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t < k; ++t) {
            if (dist[s][odd[t]] == kUnreachable) throw InputError("eulerize: graph is disconnected");
        }
    }

    // Minimum perfect matching: the lowest unmatched vertex pairs with some other.
    const std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<std::int64_t> best(full + 1, kUnreachable);
    std::vector<std::size_t> partner(full + 1, kNone);
    best[0] = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2) continue;
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
            if (best[rest] == kUnreachable) continue;
            const std::int64_t cost = best[rest] + dist[i][odd[j]];
            if (cost < best[mask]) {
                best[mask] = cost;
                partner[mask] = j;
            }
        }
    }

    for (std::size_t mask = full; mask;) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t j = partner[mask];
        for (std::size_t v = odd[j]; v != odd[i];) {
            const std::size_t e = via[i][v];
            CurveEdge copy = graph.edges[e];
            copy.duplicate_of = e;
            out.edges.push_back(std::move(copy));
            v = graph.edges[e].u == v ? graph.edges[e].v : graph.edges[e].u;
        }
        mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }
    return out;
}

std::size_t step_from(const CurveGraph& graph, const TourStep& step) {
    const auto& e = graph.edges.at(step.edge);
    return step.forward ? e.u : e.v;
}

std::size_t step_to(const CurveGraph& graph, const TourStep& step) {
    const auto& e = graph.edges.at(step.edge);
    return step.forward ? e.v : e.u;
}

std::vector<TourStep> euler_tour(const CurveGraph& graph, std::size_t start) {
    if (start >= graph.vertices.size()) throw std::invalid_argument("euler_tour: no such start vertex");
    const auto odd = graph.odd_vertices();
    const bool trail = odd.size() == 2 && (odd[0] == start || odd[1] == start);
    if (!odd.empty() && !trail) {
        throw std::invalid_argument("euler_tour: need all degrees even, or two odd vertices with the start among them");
    }

    std::vector<std::vector<std::size_t>> incident(graph.vertices.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        incident[graph.edges[e].u].push_back(e);
        if (graph.edges[e].v != graph.edges[e].u) incident[graph.edges[e].v].push_back(e);
    }
    std::vector<bool> used(graph.edges.size(), false);
    std::vector<std::size_t> cursor(graph.vertices.size(), 0);

    struct Frame {
        std::size_t vertex;
        std::optional<TourStep> arrived_by;
    };
    std::vector<Frame> stack{{start, std::nullopt}};
    std::vector<TourStep> circuit;
    while (!stack.empty()) {
        const std::size_t v = stack.back().vertex;
        auto& list = incident[v];
        while (cursor[v] < list.size() && used[list[cursor[v]]]) ++cursor[v];
        if (cursor[v] == list.size()) {
            if (stack.back().arrived_by) circuit.push_back(*stack.back().arrived_by);
            stack.pop_back();
            continue;
        }
        const std::size_t e = list[cursor[v]];
        used[e] = true;
        const TourStep step{e, graph.edges[e].u == v};
        stack.push_back({step_to(graph, step), step});
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != graph.edges.size()) throw std::invalid_argument("euler_tour: graph is disconnected");
    return circuit;
}

std::string curve_graph_to_json(const CurveGraph& graph) {
    std::string out = "{\"vertices\": [";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (v) out += ", ";
        out += "{\"kind\": \"" + vertex_kind_name(graph.vertices[v].kind) +
               "\", \"pixels\": " + points_to_json(graph.vertices[v].pixels) + "}";
    }
    out += "], \"edges\": [";
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        if (e) out += ", ";
        const auto& edge = graph.edges[e];
        out += "{\"u\": " + std::to_string(edge.u) + ", \"v\": " + std::to_string(edge.v) +
               ", \"pixels\": " + points_to_json(edge.pixels);
        if (edge.duplicate_of) out += ", \"duplicate_of\": " + std::to_string(*edge.duplicate_of);
        out += "}";
    }
    out += "]}";
    return out;
}

}  // namespace tcover
