#pragma once

#include <cstdint>
#include <random>

#include "tcover/path.hpp"

namespace tcover {

/// Open 8-path y = floor((a*x + c) / b) for x = 0 .. count-1; requires
/// b > 0 and |a| <= b.
DigitalPath digitized_line(std::size_t count, std::int64_t a, std::int64_t b, std::int64_t c = 0);

/// Closed 8-path around the origin traced by the midpoint circle rule.
DigitalPath digitized_circle(std::int64_t radius);

/// Digitized circle whose point count is close to `count` (at least 8).
DigitalPath digitized_circle_with_points(std::size_t count);

/// Open random walk of exactly `count` points. Index-only walks jump
/// anywhere within a small window around the previous point.
DigitalPath random_walk(std::size_t count, Adjacency adjacency, std::mt19937_64& rng);

/// Closed random walk with at most `max_points` points (at least 2): a free
/// excursion followed by a randomized greedy return next to the start.
DigitalPath random_closed_walk(std::size_t max_points, Adjacency adjacency, std::mt19937_64& rng);

/// Open or closed random path with 1 .. max_points points (closed: 2 ..).
DigitalPath random_path(std::size_t max_points, Adjacency adjacency, bool closed, std::mt19937_64& rng);

}  // namespace tcover
