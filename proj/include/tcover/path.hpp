#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcover {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(const GridPoint& p);

enum class Adjacency { Four, Eight, IndexOnly };

std::string_view adjacency_name(Adjacency a);  // "4", "8", "index"
std::optional<Adjacency> parse_adjacency(std::string_view s);

/// True iff p != q and, unless `a` is IndexOnly, the l1 (Four) or
/// l-infinity (Eight) norm of q - p is at most 1.
bool is_adjacent(const GridPoint& p, const GridPoint& q, Adjacency a);

/// Ordered point list. Consecutive points are distinct and adjacent; when
/// `closed`, the last point is also adjacent to the first. Use
/// validate_path() before trusting a path built from external data.
struct DigitalPath {
    std::vector<GridPoint> points;
    bool closed = false;
    Adjacency adjacency = Adjacency::Eight;

    std::size_t size() const { return points.size(); }
    const GridPoint& operator[](std::size_t i) const { return points[i]; }
    /// Point at index i taken modulo size(); only meaningful for closed paths
    /// or for i < size().
    const GridPoint& at_wrapped(std::size_t i) const { return points[i % points.size()]; }
};

struct ValidationReport {
    enum class Reason { None, Empty, Repetition, NonAdjacent };

    Reason reason = Reason::None;
    /// First offending pair is (index, index + 1), or (n, 0) for the closing pair.
    std::size_t index = 0;

    bool ok() const { return reason == Reason::None; }
    std::string message() const;
};

ValidationReport validate_path(const DigitalPath& path);

/// Sub-path (p_start, ..., p_{start+len-1}), indices modulo the path size on
/// closed paths. A closed path admits len == size() (the full turn).
struct IndexInterval {
    std::size_t start = 0;
    std::size_t len = 1;

    friend auto operator<=>(const IndexInterval&, const IndexInterval&) = default;
};

std::string to_string(const IndexInterval& iv);

bool is_valid_interval(const IndexInterval& iv, std::size_t path_size, bool closed);

/// Full turns on a closed path all denote the same index set; they are
/// reported with start 0.
IndexInterval canonical(IndexInterval iv, std::size_t path_size, bool closed);

/// Path index of the k-th point of the interval.
inline std::size_t interval_index(const IndexInterval& iv, std::size_t k, std::size_t path_size) {
    return (iv.start + k) % path_size;
}

/// Last path index covered by the interval.
inline std::size_t interval_last(const IndexInterval& iv, std::size_t path_size) {
    return (iv.start + iv.len - 1) % path_size;
}

/// True iff `inner` is a sub-interval of `outer`: its start lies within
/// outer and it does not run past outer's end (cyclically on closed paths).
bool interval_contains(const IndexInterval& outer, const IndexInterval& inner,
                       std::size_t path_size, bool closed);

/// Middle point used to identify a sub-path: start + floor((len - 1) / 2).
/// Re-adding points around it alternately, positive side first, rebuilds the
/// interval.
std::size_t middle_index(const IndexInterval& iv, std::size_t path_size);

struct RealPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Piecewise linear curve through the path points, vertex k at parameter
/// k/n (open) or k/(n+1) (closed, with P(1) = p_0). Throws
/// std::invalid_argument if t is outside [0, 1] or the path is empty.
RealPoint canonical_extension(const DigitalPath& path, double t);

/// Calls `visit` on every (start, len) pair, starts ascending then lengths
/// ascending: (n+1)(n+2)/2 intervals on an open path, (n+1)^2 on a closed
/// one. `max_len` restricts the lengths.
void enumerate_subpaths(std::size_t path_size, bool closed,
                        const std::function<void(const IndexInterval&)>& visit,
                        std::optional<std::size_t> max_len = std::nullopt);

std::vector<IndexInterval> all_subpaths(std::size_t path_size, bool closed,
                                        std::optional<std::size_t> max_len = std::nullopt);

}  // namespace tcover
