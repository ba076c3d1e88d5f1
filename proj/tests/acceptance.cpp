// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "support.hpp"
#include "tcover/arc_graph.hpp"
#include "tcover/cover.hpp"
#include "tcover/dss.hpp"
#include "tcover/generators.hpp"
#include "tcover/verify.hpp"

using namespace tcover;
using namespace tcover::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

// Criteria 1-3 share one corpus run.
struct SuiteResult {
    std::vector<InvariantReport> reports;
    double seconds = 0.0;
};

SuiteResult run_suite() {
    VerifyOptions options;
    options.seed = 20240611;
    options.paths = 1000;
    options.max_points = 200;
    options.conservativity_trials = 0;
    const auto t0 = Clock::now();
    SuiteResult r;
    r.reports = run_verification(options);
    r.seconds = seconds_since(t0);
    return r;
}

Outcome from_report(const InvariantReport& r, const std::string& extra = {}) {
    Outcome o;
    o.pass = r.pass && r.checked > 0;
    o.detail = std::to_string(r.checked) + " covers checked" + extra;
    if (!r.pass) o.detail += "; counterexample " + r.counterexample;
    return o;
}

Outcome criterion_probe() {
    const auto t0 = Clock::now();
    const auto rows = complexity_probe({"dss", {}}, {1000, 10000, 100000}, ProbeShape::Circle);
    const double elapsed = seconds_since(t0);
    const double spread = calls_ratio_spread(rows);
    Outcome o;
    o.pass = spread <= 1.5 && elapsed < 30.0;
    char buf[256];
    std::snprintf(buf, sizeof buf, "calls/n = %.3f, %.3f, %.3f; spread %.3f; %.1f s", rows[0].calls_per_point(),
                  rows[1].calls_per_point(), rows[2].calls_per_point(), spread, elapsed);
    o.detail = buf;
    return o;
}

Outcome criterion_dss() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(5150);
    std::size_t intervals = 0;
    Outcome o;
    for (int trial = 0; trial < 100 && o.pass; ++trial) {
        const auto path = random_path(25, Adjacency::Eight, trial % 2 == 1, rng);
        const std::size_t n = path.size();
        std::map<IndexInterval, bool> truth;
        for (const auto& iv : all_subpaths(n, path.closed)) {
            truth[iv] = StraightnessOracle::straight(interval_points(path, iv), Adjacency::Eight);
            ++intervals;
            if (dss_holds(path, iv) != truth[iv]) {
                o.pass = false;
                o.detail = "stateless check disagrees on " + to_string(iv);
            }
        }
        const auto pred = make_predicate({"dss", {}}, path);
        const std::size_t top = path.closed ? n : 0;
        for (std::size_t start = 0; start < n && o.pass; ++start) {
            // Growing forward from every start, then backward from every end.
            for (const bool positive : {true, false}) {
                auto rec = pred->make_recognizer();
                rec->reset(start);
                const std::size_t room = path.closed ? top : (positive ? n - start : start + 1);
                bool alive = true;
                for (std::size_t len = 2; len <= room; ++len) {
                    const IndexInterval iv = positive ? IndexInterval{start, len}
                                                      : IndexInterval{(start + n * 2 - (len - 1)) % n, len};
                    const bool want = truth.at(iv);
                    if (alive) alive = positive ? rec->try_extend_positive() : rec->try_extend_negative();
                    if (alive != want) {
                        o.pass = false;
                        o.detail = "recognizer disagrees on " + to_string(iv);
                        break;
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (o.pass && elapsed >= 60.0) o.pass = false;
    o.detail = (o.detail.empty() ? "" : o.detail + "; ") + std::to_string(intervals) + " intervals, " +
               std::to_string(static_cast<int>(elapsed * 1000)) + " ms";
    return o;
}

Outcome criterion_trace() {
    Outcome o;
    std::size_t traced = 0;
    for (const bool cpp_always : {true, false}) {
        for (const auto& f : trace_fixtures()) {
            const auto image = image_from_ascii(f.rows);
            const auto components = split_components(image, f.adjacency);
            const auto results = trace_image(image, {f.adjacency, cpp_always});
            for (std::size_t i = 0; i < results.size(); ++i) {
                ++traced;
                const auto problem = check_trace(components[i], results[i]);
                if (!problem.empty() && o.pass) {
                    o.pass = false;
                    o.detail = f.name + ": " + problem + "; ";
                }
            }
        }
    }
    o.detail += std::to_string(traced) + " components traced (closed and open-trail modes)";
    return o;
}

Outcome criterion_postman() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& f : trace_fixtures()) {
        for (const auto& component : split_components(image_from_ascii(f.rows), f.adjacency)) {
            const auto g = build_curve_graph(component, f.adjacency);
            if (g.odd_vertices().size() > 8) continue;
            ++checked;
            const auto got = eulerize(g).duplicated_weight();
            const auto want = min_postman_weight(g);
            if (got != want && o.pass) {
                o.pass = false;
                o.detail = f.name + ": " + std::to_string(got) + " vs " + std::to_string(want) + "; ";
            }
        }
    }
    o.detail += std::to_string(checked) + " fixture graphs";
    return o;
}

Outcome criterion_conservativity() {
    Outcome o;
    const auto paths = random_path_corpus(200, 60, 99);
    std::vector<PredicateSpec> shipped{{"dss", {}},        {"max_len", {{"k", 1}}}, {"max_len", {{"k", 2}}},
                                       {"max_len", {{"k", 5}}}, {"x_monotone", {}},  {"y_monotone", {}},
                                       {"bbox", {{"w", 3}, {"h", 3}}}};
    for (const auto& spec : shipped) {
        const auto r = check_conservative(spec, paths, 10000, 7);
        if (!r.pass() || r.trials != 10000) {
            o.pass = false;
            o.detail += describe(spec) + " flagged; ";
        }
    }
    const auto planted = check_conservative({"contains_p0", {}}, paths, 1000, 7);
    if (planted.pass()) {
        o.pass = false;
        o.detail += "contains_p0 not detected; ";
    } else {
        o.detail += "contains_p0 caught after " + std::to_string(planted.trials) + " trials; ";
    }
    o.detail += std::to_string(shipped.size()) + " shipped predicates x 10000 trials";
    return o;
}

}  // namespace

int main() {
    const auto suite = run_suite();
    const auto find = [&](const std::string& name) -> const InvariantReport& {
        for (const auto& r : suite.reports) {
            if (r.name == name) return r;
        }
        throw std::logic_error("missing report " + name);
    };
    char took[64];
    std::snprintf(took, sizeof took, "; %.1f s", suite.seconds);
    Outcome equivalence = from_report(find("oracle-equivalence"), took);
    if (suite.seconds >= 120.0) equivalence.pass = false;
    report(1, "oracle equivalence", equivalence);
    report(2, "segment bound", from_report(find("segment-bound")));
    report(3, "proper arc graph", from_report(find("proper-arc-graph")));
    report(4, "linear predicate calls", criterion_probe());
    report(5, "dss recognizer soundness", criterion_dss());
    report(6, "trace pixel coverage", criterion_trace());
    report(7, "postman optimality", criterion_postman());
    report(8, "conservativity regression", criterion_conservativity());
    return failures == 0 ? 0 : 1;
}
