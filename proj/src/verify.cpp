#include "tcover/verify.hpp"

#include <random>
#include <set>

#include "tcover/arc_graph.hpp"
#include "tcover/cover.hpp"
#include "tcover/error.hpp"
#include "tcover/generators.hpp"
#include "tcover/path_json.hpp"

namespace tcover {

namespace {

std::string segments_json(const std::vector<IndexInterval>& segments) {
    std::string out = "[";
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += ", ";
        out += "[" + std::to_string(segments[i].start) + "," + std::to_string(segments[i].len) + "]";
    }
    return out + "]";
}

std::string dump(const DigitalPath& path, const PredicateSpec& spec, const std::string& extra) {
    return "{\"path\": " + path_to_json(path) + ", \"predicate\": " + predicate_spec_to_json(spec) + extra + "}";
}

void fail(InvariantReport& report, std::string counterexample) {
    if (report.pass) report.counterexample = std::move(counterexample);
    report.pass = false;
}

}  // namespace

std::vector<PredicateSpec> default_suite_predicates() {
    return {{"dss", {}},
            {"max_len", {{"k", 1}}},
            {"max_len", {{"k", 2}}},
            {"max_len", {{"k", 5}}},
            {"x_monotone", {}},
            {"bbox", {{"w", 3}, {"h", 3}}}};
}

std::vector<DigitalPath> random_path_corpus(std::size_t count, std::size_t max_points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DigitalPath> paths;
    paths.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const bool closed = i % 2 == 1;
        const Adjacency adjacency = (i / 2) % 2 == 0 ? Adjacency::Four : Adjacency::Eight;
        paths.push_back(random_path(max_points, adjacency, closed, rng));
    }
    return paths;
}

std::vector<InvariantReport> run_verification(const VerifyOptions& options) {
    const auto predicates = options.predicates.empty() ? default_suite_predicates() : options.predicates;
    const auto paths = random_path_corpus(options.paths, options.max_points, options.seed);

    InvariantReport equivalence;
    equivalence.name = "oracle-equivalence";
    InvariantReport bound;
    bound.name = "segment-bound";
    InvariantReport proper;
    proper.name = "proper-arc-graph";
    for (const auto& path : paths) {
        for (const auto& spec : predicates) {
            std::shared_ptr<const Predicate> predicate;
            try {
                predicate = make_predicate(spec, path);
            } catch (const InputError&) {
                continue;
            }
            const auto ssd = ssd_cover(path, *predicate);
            const auto forward = forward_cover(path, *predicate);
            const auto brute = brute_force_cover(path, *predicate, std::max(options.max_points, path.size()));

            ++equivalence.checked;
            if (ssd.segments != brute.segments || forward.segments != brute.segments) {
                fail(equivalence, dump(path, spec,
                                       ", \"ssd\": " + segments_json(ssd.segments) + ", \"forward\": " +
                                           segments_json(forward.segments) + ", \"brute_force\": " +
                                           segments_json(brute.segments)));
            }

            ++bound.checked;
            std::set<std::size_t> middles;
            for (const auto& s : ssd.segments) middles.insert(middle_index(s, path.size()));
            if (ssd.segments.size() > path.size() || middles.size() != ssd.segments.size()) {
                fail(bound, dump(path, spec, ", \"segments\": " + segments_json(ssd.segments)));
            }

            ++proper.checked;
            const auto graph = build_arc_graph(ssd);
            if (!graph.proper || graph.interval == path.closed) {
                fail(proper, dump(path, spec, ", \"arc_graph\": " + arc_graph_to_json(graph)));
            }
        }
    }

    std::vector<InvariantReport> reports{equivalence, bound, proper};
    if (options.conservativity_trials > 0) {
        InvariantReport conservativity;
        conservativity.name = "conservativity";
        for (const auto& spec : predicates) {
            std::vector<DigitalPath> usable;
            for (const auto& path : paths) {
                try {
                    make_predicate(spec, path);
                    usable.push_back(path);
                } catch (const InputError&) {
                }
            }
            const auto report = check_conservative(spec, usable, options.conservativity_trials, options.seed);
            conservativity.checked += report.trials;
            if (!report.pass()) {
                const auto& c = *report.counterexample;
                fail(conservativity, dump(usable[c.path_index], spec,
                                          ", \"outer\": [" + std::to_string(c.outer.start) + "," +
                                              std::to_string(c.outer.len) + "], \"inner\": [" +
                                              std::to_string(c.inner.start) + "," + std::to_string(c.inner.len) + "]"));
            }
        }
        reports.push_back(conservativity);
    }
    return reports;
}

}  // namespace tcover
