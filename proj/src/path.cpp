#include "tcover/path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tcover {

std::string to_string(const GridPoint& p) {
    std::ostringstream os;
    os << '(' << p.x << ',' << p.y << ')';
    return os.str();
}

std::string_view adjacency_name(Adjacency a) {
    switch (a) {
        case Adjacency::Four: return "4";
        case Adjacency::Eight: return "8";
        case Adjacency::IndexOnly: return "index";
    }
    return "?";
}

std::optional<Adjacency> parse_adjacency(std::string_view s) {
    if (s == "4") return Adjacency::Four;
    if (s == "8") return Adjacency::Eight;
    if (s == "index") return Adjacency::IndexOnly;
    return std::nullopt;
}

bool is_adjacent(const GridPoint& p, const GridPoint& q, Adjacency a) {
    if (p == q) return false;
    const std::int64_t dx = std::llabs(q.x - p.x);
    const std::int64_t dy = std::llabs(q.y - p.y);
    switch (a) {
        case Adjacency::Four: return dx + dy <= 1;
        case Adjacency::Eight: return std::max(dx, dy) <= 1;
        case Adjacency::IndexOnly: return true;
    }
    return false;
}

std::string ValidationReport::message() const {
    std::ostringstream os;
    switch (reason) {
        case Reason::None: return "ok";
        case Reason::Empty: return "path has no points";
        case Reason::Repetition:
            os << "repeated point at index " << index << " (consecutive points must differ)";
            break;
        case Reason::NonAdjacent:
            os << "points at index " << index << " and its successor are not adjacent";
            break;
    }
    return os.str();
}

namespace {

ValidationReport check_pair(const GridPoint& p, const GridPoint& q, Adjacency a, std::size_t index) {
    if (p == q) return {ValidationReport::Reason::Repetition, index};
    if (!is_adjacent(p, q, a)) return {ValidationReport::Reason::NonAdjacent, index};
    return {};
}

}  // namespace

ValidationReport validate_path(const DigitalPath& path) {
    if (path.points.empty()) return {ValidationReport::Reason::Empty, 0};
    const std::size_t n = path.points.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (auto r = check_pair(path.points[i], path.points[i + 1], path.adjacency, i); !r.ok()) return r;
    }
    if (path.closed) {
        // A single closed point would repeat itself across the closing pair.
        if (auto r = check_pair(path.points[n - 1], path.points[0], path.adjacency, n - 1); !r.ok()) return r;
    }
    return {};
}

std::string to_string(const IndexInterval& iv) {
    std::ostringstream os;
    os << "[start=" << iv.start << ", len=" << iv.len << ']';
    return os.str();
}

bool is_valid_interval(const IndexInterval& iv, std::size_t path_size, bool closed) {
    if (iv.len < 1 || iv.start >= path_size) return false;
    if (closed) return iv.len <= path_size;
    return iv.start + iv.len <= path_size;
}

IndexInterval canonical(IndexInterval iv, std::size_t path_size, bool closed) {
    if (closed && iv.len == path_size) iv.start = 0;
    return iv;
}

bool interval_contains(const IndexInterval& outer, const IndexInterval& inner,
                       std::size_t path_size, bool closed) {
    if (!closed) {
        return inner.start >= outer.start && inner.start + inner.len <= outer.start + outer.len;
    }
    if (outer.len == path_size) return true;
    if (inner.len == path_size) return false;
    const std::size_t offset = (inner.start + path_size - outer.start) % path_size;
    return offset + inner.len <= outer.len;
}

std::size_t middle_index(const IndexInterval& iv, std::size_t path_size) {
    return (iv.start + (iv.len - 1) / 2) % path_size;
}

RealPoint canonical_extension(const DigitalPath& path, double t) {
    if (path.points.empty()) throw std::invalid_argument("canonical_extension: empty path");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("canonical_extension: t must lie in [0, 1]");
    const std::size_t count = path.points.size();
    if (count == 1) {
        return {static_cast<double>(path.points[0].x), static_cast<double>(path.points[0].y)};
    }
    // Number of linear pieces: n for an open path, n + 1 for a closed one.
    const std::size_t pieces = path.closed ? count : count - 1;
    const double scaled = t * static_cast<double>(pieces);
    std::size_t k = static_cast<std::size_t>(std::floor(scaled));
    if (k >= pieces) k = pieces - 1;
    const double local = scaled - static_cast<double>(k);
    const GridPoint& a = path.points[k];
    const GridPoint& b = path.points[(k + 1) % count];
    return {static_cast<double>(a.x) + local * static_cast<double>(b.x - a.x),
            static_cast<double>(a.y) + local * static_cast<double>(b.y - a.y)};
}

void enumerate_subpaths(std::size_t path_size, bool closed,
                        const std::function<void(const IndexInterval&)>& visit,
                        std::optional<std::size_t> max_len) {
    for (std::size_t start = 0; start < path_size; ++start) {
        std::size_t longest = closed ? path_size : path_size - start;
        if (max_len) longest = std::min(longest, *max_len);
        for (std::size_t len = 1; len <= longest; ++len) visit({start, len});
    }
}

std::vector<IndexInterval> all_subpaths(std::size_t path_size, bool closed, std::optional<std::size_t> max_len) {
    std::vector<IndexInterval> out;
    enumerate_subpaths(path_size, closed, [&](const IndexInterval& iv) { out.push_back(iv); }, max_len);
    return out;
}

}  // namespace tcover
