#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcover/path.hpp"
#include "tcover/predicate.hpp"

namespace tcover {

/// All saturated sub-paths of a path for one predicate, sorted by start.
struct SaturatedCover {
    std::size_t points = 0;  ///< n + 1
    bool closed = false;
    PredicateSpec predicate;
    std::vector<IndexInterval> segments;
    /// Every recognizer decision and stateless evaluation, failed ones included.
    std::uint64_t predicate_calls = 0;
};

/// Saturated sub-path decomposition. Starting from the first point whose
/// singleton satisfies the predicate, grows an interval around it
/// alternately (positive side first), finishes it one-sided, then for every
/// following segment steps one point past the end, drops points from the
/// negative side until the predicate holds again and regrows. Points whose
/// singleton fails are skipped. Linear in predicate calls when the
/// predicate is conservative.
SaturatedCover ssd_cover(const DigitalPath& path, const PredicateSpec& spec);
SaturatedCover ssd_cover(const DigitalPath& path, const Predicate& predicate);

/// Same output using forward extension and negative-end removal only. On a
/// closed path the sweep runs past the end of the first segment once more;
/// that first segment is kept only if the sweep finds it again.
SaturatedCover forward_cover(const DigitalPath& path, const PredicateSpec& spec);
SaturatedCover forward_cover(const DigitalPath& path, const Predicate& predicate);

inline constexpr std::size_t kBruteForceDefaultCap = 500;

/// Ground truth from the definition: evaluates every sub-path statelessly
/// and keeps the true ones that no other true sub-path contains. Throws
/// CapacityError above `cap` points.
SaturatedCover brute_force_cover(const DigitalPath& path, const PredicateSpec& spec,
                                 std::size_t cap = kBruteForceDefaultCap);
SaturatedCover brute_force_cover(const DigitalPath& path, const Predicate& predicate,
                                 std::size_t cap = kBruteForceDefaultCap);

/// `{"n": 60, "closed": true, "predicate": {...}, "segments": [{"start": 0, "len": 13}], "predicate_calls": 412}`
/// where n is the number of points.
std::string cover_to_json(const SaturatedCover& cover);
SaturatedCover cover_from_json(std::string_view text);

enum class ProbeShape { Circle, Line, Walk };

struct ProbeRow {
    std::size_t requested = 0;
    std::size_t points = 0;
    std::uint64_t predicate_calls = 0;
    std::size_t segments = 0;
    double seconds = 0.0;

    double calls_per_point() const { return static_cast<double>(predicate_calls) / static_cast<double>(points); }
};

/// Runs ssd_cover on a synthetic path per size and records the call counts.
std::vector<ProbeRow> complexity_probe(const PredicateSpec& spec, const std::vector<std::size_t>& sizes,
                                       ProbeShape shape = ProbeShape::Circle, std::uint64_t seed = 1);

/// max / min of calls_per_point over the rows.
double calls_ratio_spread(const std::vector<ProbeRow>& rows);

}  // namespace tcover
