#include "tcover/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace tcover {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::vector<GridPoint> unit_steps(Adjacency adjacency) {
    if (adjacency == Adjacency::Four) return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    if (adjacency == Adjacency::Eight) return {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    std::vector<GridPoint> steps;
    for (std::int64_t dx = -3; dx <= 3; ++dx) {
        for (std::int64_t dy = -3; dy <= 3; ++dy) {
            if (dx || dy) steps.push_back({dx, dy});
        }
    }
    return steps;
}

std::int64_t distance(const GridPoint& p, const GridPoint& q, Adjacency adjacency) {
    const std::int64_t dx = std::llabs(p.x - q.x);
    const std::int64_t dy = std::llabs(p.y - q.y);
    return adjacency == Adjacency::Four ? dx + dy : std::max(dx, dy);
}

}  // namespace

DigitalPath digitized_line(std::size_t count, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b <= 0 || std::llabs(a) > b) throw std::invalid_argument("digitized_line: need b > 0 and |a| <= b");
    DigitalPath path;
    path.adjacency = Adjacency::Eight;
    path.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto x = static_cast<std::int64_t>(i);
        path.points.push_back({x, floor_div(a * x + c, b)});
    }
    return path;
}

DigitalPath digitized_circle(std::int64_t radius) {
    if (radius < 1) throw std::invalid_argument("digitized_circle: radius must be >= 1");
    std::vector<GridPoint> octant;
    std::int64_t x = 0, y = radius, d = 1 - radius;
    while (x <= y) {
        octant.push_back({x, y});
        if (d < 0) {
            d += 2 * x + 3;
        } else {
            d += 2 * (x - y) + 5;
            --y;
        }
        ++x;
    }

    std::vector<GridPoint> ring;
    auto emit = [&](GridPoint p) {
        if (ring.empty() || ring.back() != p) ring.push_back(p);
    };
    auto forward = [&](auto map) {
        for (const auto& p : octant) emit(map(p));
    };
    auto backward = [&](auto map) {
        for (auto it = octant.rbegin(); it != octant.rend(); ++it) emit(map(*it));
    };
    // Clockwise from the top, one octant at a time.
    forward([](GridPoint p) { return GridPoint{p.x, p.y}; });
    backward([](GridPoint p) { return GridPoint{p.y, p.x}; });
    forward([](GridPoint p) { return GridPoint{p.y, -p.x}; });
    backward([](GridPoint p) { return GridPoint{p.x, -p.y}; });
    forward([](GridPoint p) { return GridPoint{-p.x, -p.y}; });
    backward([](GridPoint p) { return GridPoint{-p.y, -p.x}; });
    forward([](GridPoint p) { return GridPoint{-p.y, p.x}; });
    backward([](GridPoint p) { return GridPoint{-p.x, p.y}; });
    if (ring.size() > 1 && ring.back() == ring.front()) ring.pop_back();

    DigitalPath path;
    path.points = std::move(ring);
    path.closed = true;
    path.adjacency = Adjacency::Eight;
    return path;
}

DigitalPath digitized_circle_with_points(std::size_t count) {
    const double radius = static_cast<double>(count) / (4.0 * std::sqrt(2.0));
    return digitized_circle(std::max<std::int64_t>(1, std::llround(radius)));
}

DigitalPath random_walk(std::size_t count, Adjacency adjacency, std::mt19937_64& rng) {
    const auto steps = unit_steps(adjacency);
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    DigitalPath path;
    path.adjacency = adjacency;
    GridPoint p{0, 0};
    for (std::size_t i = 0; i < count; ++i) {
        path.points.push_back(p);
        const GridPoint s = steps[pick(rng)];
        p = {p.x + s.x, p.y + s.y};
    }
    return path;
}

DigitalPath random_closed_walk(std::size_t max_points, Adjacency adjacency, std::mt19937_64& rng) {
    max_points = std::max<std::size_t>(max_points, 2);
    DigitalPath path;
    path.adjacency = adjacency;
    path.closed = true;

    if (adjacency == Adjacency::IndexOnly) {
        path = random_walk(std::uniform_int_distribution<std::size_t>(2, max_points)(rng), adjacency, rng);
        path.closed = true;
        // The closing pair must not repeat a point.
        const auto steps = unit_steps(adjacency);
        std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
        const GridPoint before = path.points[path.points.size() - 2];
        while (path.points.back() == path.points.front()) {
            const GridPoint s = steps[pick(rng)];
            path.points.back() = {before.x + s.x, before.y + s.y};
        }
        return path;
    }

    const auto steps = unit_steps(adjacency);
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    // The return leg needs at most as many steps as the excursion.
    const std::size_t outward = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, (max_points - 1) / 2))(rng);
    const GridPoint origin{0, 0};
    GridPoint p = origin;
    path.points.push_back(p);
    for (std::size_t i = 0; i < outward; ++i) {
        const GridPoint s = steps[pick(rng)];
        p = {p.x + s.x, p.y + s.y};
        path.points.push_back(p);
    }
    if (p == origin) {
        // Excursion came back onto the start; step aside so the closing pair differs.
        GridPoint s = steps[pick(rng)];
        while (GridPoint{p.x + s.x, p.y + s.y} == path.points[path.points.size() - 2]) s = steps[pick(rng)];
        p = {p.x + s.x, p.y + s.y};
        path.points.push_back(p);
    }
    while (!is_adjacent(p, origin, adjacency)) {
        const std::int64_t here = distance(p, origin, adjacency);
        std::vector<GridPoint> closer;
        for (const auto& s : steps) {
            const GridPoint q{p.x + s.x, p.y + s.y};
            if (distance(q, origin, adjacency) < here && q != origin) closer.push_back(q);
        }
        p = closer[std::uniform_int_distribution<std::size_t>(0, closer.size() - 1)(rng)];
        path.points.push_back(p);
    }
    return path;
}

DigitalPath random_path(std::size_t max_points, Adjacency adjacency, bool closed, std::mt19937_64& rng) {
    if (closed) return random_closed_walk(max_points, adjacency, rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_points))(rng);
    return random_walk(count, adjacency, rng);
}

}  // namespace tcover
