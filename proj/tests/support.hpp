#pragma once

// Fixtures and independent oracles shared by the unit tests and the
// acceptance runner. The oracles do not reuse the algorithms they check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tcover/curve_graph.hpp"
#include "tcover/image.hpp"
#include "tcover/path.hpp"
#include "tcover/trace.hpp"

namespace tcover::testing {

/// '#' is foreground, anything else background; rows top to bottom.
inline BinaryImage image_from_ascii(const std::vector<std::string>& rows) {
    std::int64_t width = 0;
    for (const auto& r : rows) width = std::max<std::int64_t>(width, static_cast<std::int64_t>(r.size()));
    BinaryImage image(width, static_cast<std::int64_t>(rows.size()));
    for (std::size_t y = 0; y < rows.size(); ++y) {
        for (std::size_t x = 0; x < rows[y].size(); ++x) {
            if (rows[y][x] == '#') image.set({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
        }
    }
    return image;
}

struct Fixture {
    std::string name;
    Adjacency adjacency;
    std::vector<std::string> rows;
};

inline std::vector<Fixture> trace_fixtures() {
    return {
        {"segment", Adjacency::Eight, {"#####"}},
        {"plus", Adjacency::Four, {".#.", "###", ".#."}},
        {"plus-long-arms", Adjacency::Eight,
         {"...#...", "...#...", "...#...", "#######", "...#...", "...#...", "...#..."}},
        {"H", Adjacency::Four, {"#.....#", "#.....#", "#######", "#.....#", "#.....#"}},
        {"H-8", Adjacency::Eight, {"#.....#", "#.....#", "#######", "#.....#", "#.....#"}},
        {"figure-eight", Adjacency::Eight,
         {".###.", "#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#", ".###."}},
        {"two-junction-corridor", Adjacency::Four, {".#......#.", "##########", ".#......#."}},
        {"pure-cycle", Adjacency::Eight, {".###.", "#...#", "#...#", "#...#", ".###."}},
        {"two-components", Adjacency::Eight, {"#####", ".....", "###.."}},
        {"comb", Adjacency::Four, {"#.#.#.#", "#######", "...#..."}},
        {"blob", Adjacency::Eight, {".#.", "###", ".#."}},
        {"isolated", Adjacency::Eight, {"...", ".#.", "..."}},
    };
}

/// Arithmetic straightness by exhaustion: some primitive (a, b) with
/// |a|, |b| <= bound puts every a*x - b*y within a window of omega values,
/// omega = max(|a|, |b|) (Eight) or |a| + |b| (Four). Candidate directions
/// are pruned as points arrive, so feeding the points of growing intervals
/// from one start costs the surviving candidates only.
class StraightnessOracle {
  public:
    StraightnessOracle(Adjacency adjacency, std::int64_t bound) {
        for (std::int64_t a = 0; a <= bound; ++a) {
            for (std::int64_t b = -bound; b <= bound; ++b) {
                if ((a == 0 && b <= 0) || std::gcd(a, b) != 1) continue;
                const std::int64_t omega =
                    adjacency == Adjacency::Four ? a + std::llabs(b) : std::max<std::int64_t>(a, std::llabs(b));
                all_.push_back({a, b, omega, 0, 0});
            }
        }
        clear();
    }

    void clear() {
        alive_ = all_;
        empty_ = true;
    }

    /// Adds a point; returns whether the points so far are still straight.
    bool add(const GridPoint& p) {
        std::vector<Candidate> next;
        next.reserve(alive_.size());
        for (auto c : alive_) {
            const std::int64_t r = c.a * p.x - c.b * p.y;
            if (empty_) {
                c.lo = c.hi = r;
            } else {
                c.lo = std::min(c.lo, r);
                c.hi = std::max(c.hi, r);
            }
            if (c.hi - c.lo <= c.omega - 1) next.push_back(c);
        }
        alive_ = std::move(next);
        empty_ = false;
        return !alive_.empty();
    }

    static bool straight(const std::vector<GridPoint>& points, Adjacency adjacency) {
        std::int64_t xmin = std::numeric_limits<std::int64_t>::max(), xmax = std::numeric_limits<std::int64_t>::min();
        std::int64_t ymin = xmin, ymax = xmax;
        for (const auto& p : points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        StraightnessOracle oracle(adjacency, 2 * ((xmax - xmin) + (ymax - ymin)) + 1);
        bool ok = true;
        for (const auto& p : points) ok = oracle.add(p);
        return ok;
    }

  private:
    struct Candidate {
        std::int64_t a, b, omega, lo, hi;
    };
    std::vector<Candidate> all_;
    std::vector<Candidate> alive_;
    bool empty_ = true;
};

/// Points of an interval, in order.
inline std::vector<GridPoint> interval_points(const DigitalPath& path, const IndexInterval& iv) {
    std::vector<GridPoint> out;
    for (std::size_t k = 0; k < iv.len; ++k) out.push_back(path.at_wrapped(iv.start + k));
    return out;
}

/// Minimum total weight of duplicated edges making all degrees even:
/// Floyd-Warshall distances, then every perfect matching of the odd
/// vertices enumerated recursively.
inline std::int64_t min_postman_weight(const CurveGraph& graph) {
    const std::size_t n = graph.vertices.size();
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : graph.edges) {
        const std::int64_t w = static_cast<std::int64_t>(e.pixels.size()) + 2;
        d[e.u][e.v] = std::min(d[e.u][e.v], w);
        d[e.v][e.u] = std::min(d[e.v][e.u], w);
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    std::vector<std::size_t> odd;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] % 2) odd.push_back(v);
    }
    std::function<std::int64_t(std::vector<std::size_t>)> best = [&](std::vector<std::size_t> rest) -> std::int64_t {
        if (rest.empty()) return 0;
        const std::size_t first = rest.front();
        std::int64_t result = inf;
        for (std::size_t i = 1; i < rest.size(); ++i) {
            std::vector<std::size_t> remaining;
            for (std::size_t j = 1; j < rest.size(); ++j) {
                if (j != i) remaining.push_back(rest[j]);
            }
            result = std::min(result, d[first][rest[i]] + best(remaining));
        }
        return result;
    };
    return best(odd);
}

/// Empty string when the traced path of `result` for `component` is a
/// valid path covering every foreground pixel and using every edge of the
/// toured multigraph exactly once as a contiguous run; otherwise a
/// description of the first problem.
inline std::string check_trace(const BinaryImage& component, const TraceResult& result) {
    const DigitalPath& path = result.emitted.path;
    const auto report = validate_path(path);
    if (!report.ok()) return "invalid path: " + report.message();

    const std::set<GridPoint> visited(path.points.begin(), path.points.end());
    for (const auto& p : component.foreground()) {
        if (!visited.count(p)) return "pixel " + to_string(p) + " not covered";
    }
    for (const auto& p : visited) {
        if (!component.contains(p)) return "point " + to_string(p) + " is not foreground";
    }

    const auto& edges = result.toured.edges;
    std::vector<int> uses(edges.size(), 0);
    std::size_t previous_end = 0;
    for (const auto& run : result.emitted.runs) {
        if (run.edge >= edges.size()) return "run names a missing edge";
        ++uses[run.edge];
        std::vector<GridPoint> expected = edges[run.edge].pixels;
        if (!run.forward) std::reverse(expected.begin(), expected.end());
        if (run.length != expected.size()) return "run length differs from edge " + std::to_string(run.edge);
        if (run.begin < previous_end || run.begin + run.length > path.size()) return "runs overlap or overflow";
        for (std::size_t k = 0; k < run.length; ++k) {
            if (path.points[run.begin + k] != expected[k]) {
                return "run of edge " + std::to_string(run.edge) + " differs at offset " + std::to_string(k);
            }
        }
        previous_end = run.begin + run.length;
    }
    for (std::size_t e = 0; e < uses.size(); ++e) {
        if (uses[e] != 1) return "edge " + std::to_string(e) + " used " + std::to_string(uses[e]) + " times";
    }

    // Multiset check against the graph the tour claims to cover: each
    // original edge appears once plus once per duplicate.
    std::map<std::vector<GridPoint>, int> want, got;
    for (const auto& e : result.graph.edges) ++want[e.pixels];
    for (const auto& e : edges) {
        if (e.duplicate_of) ++want[edges[*e.duplicate_of].pixels];
    }
    for (const auto& run : result.emitted.runs) ++got[edges[run.edge].pixels];
    if (want != got) return "toured edge multiset differs from graph plus duplicates";
    return {};
}

}  // namespace tcover::testing
