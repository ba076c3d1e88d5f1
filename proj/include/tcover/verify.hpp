#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcover/path.hpp"
#include "tcover/predicate.hpp"

namespace tcover {

/// dss, max_len k = 1, 2, 5, x_monotone, bbox 3x3.
std::vector<PredicateSpec> default_suite_predicates();

/// Seeded random walks cycling through (open, 4), (closed, 4), (open, 8),
/// (closed, 8), each with at most max_points points.
std::vector<DigitalPath> random_path_corpus(std::size_t count, std::size_t max_points, std::uint64_t seed);

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t paths = 1000;
    std::size_t max_points = 200;
    std::size_t conservativity_trials = 10000;
    /// Empty selects default_suite_predicates().
    std::vector<PredicateSpec> predicates;
};

struct InvariantReport {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    /// First counterexample, as JSON, when !pass.
    std::string counterexample;
};

/// Randomized invariant suite over the corpus and predicates:
///  - "oracle-equivalence": ssd_cover, forward_cover and brute_force_cover agree;
///  - "segment-bound": at most n + 1 segments with pairwise distinct middles;
///  - "proper-arc-graph": arc graph proper, interval exactly on open paths;
///  - "conservativity": check_conservative passes (skipped with 0 trials).
/// Predicates rejected for a path (e.g. adjacency mismatch) are skipped.
std::vector<InvariantReport> run_verification(const VerifyOptions& options);

}  // namespace tcover
