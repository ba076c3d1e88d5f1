// tcover: saturated sub-path covers of digital paths and image tracing.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tcover/arc_graph.hpp"
#include "tcover/cover.hpp"
#include "tcover/error.hpp"
#include "tcover/path_json.hpp"
#include "tcover/predicate.hpp"
#include "tcover/svg.hpp"
#include "tcover/trace.hpp"
#include "tcover/verify.hpp"

namespace {

using namespace tcover;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitMismatch = 4;

struct PathOptions {
    std::string input;
    std::string adjacency;
    bool closed = false;
};

struct PredicateOptions {
    std::string name;
    std::vector<std::string> params;
};

PredicateSpec parse_spec(const PredicateOptions& options) {
    if (options.name.empty()) throw InputError("--predicate is required");
    PredicateSpec spec{options.name, {}};
    for (const auto& kv : options.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--param expects k=v, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        std::int64_t parsed = 0;
        std::size_t used = 0;
        try {
            parsed = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw InputError("--param " + key + ": '" + value + "' is not an integer");
        spec.params[key] = parsed;
    }
    // Validates the name and parameters before any path is read.
    DigitalPath probe;
    probe.points = {{0, 0}};
    make_predicate(spec, probe);
    return spec;
}

Adjacency parse_adjacency_flag(const std::string& text) {
    const auto a = parse_adjacency(text);
    if (!a) throw InputError("--adjacency must be 4, 8 or index, got '" + text + "'");
    return *a;
}

DigitalPath load_path(const PathOptions& options) {
    DigitalPath path = read_path_file(options.input);
    bool changed = false;
    if (!options.adjacency.empty()) {
        path.adjacency = parse_adjacency_flag(options.adjacency);
        changed = true;
    }
    if (options.closed && !path.closed) {
        path.closed = true;
        changed = true;
    }
    if (changed) {
        const auto report = validate_path(path);
        if (!report.ok()) throw InputError(options.input + ": " + report.message());
    }
    return path;
}

void emit_output(const std::string& out, const std::string& contents) {
    if (out.empty() || out == "-") {
        std::cout << contents << "\n";
    } else {
        write_file_atomic(out, contents + "\n");
    }
}

int list_predicates() {
    for (const auto& info : registered_predicates()) {
        std::cout << info.name;
        for (const auto& p : info.params) std::cout << " " << p << "=<int>";
        if (!info.conservative) std::cout << " [not conservative]";
        std::cout << "  " << info.description << "\n";
    }
    return kExitOk;
}

struct TraceCommand {
    std::string image;
    std::string adjacency = "8";
    std::string out_dir = ".";
    bool emit_graph = false;
    std::string svg;
    bool cpp_always = false;
    unsigned jobs = 0;
};

int run_trace(const TraceCommand& cmd) {
    TraceOptions options;
    options.adjacency = parse_adjacency_flag(cmd.adjacency);
    if (options.adjacency == Adjacency::IndexOnly) throw InputError("trace needs --adjacency 4 or 8");
    options.cpp_always = cmd.cpp_always;

    const BinaryImage image = load_image_file(cmd.image);
    const auto components = split_components(image, options.adjacency);
    std::filesystem::create_directories(cmd.out_dir);
    const std::string stem = std::filesystem::path(cmd.image).stem().string();

    std::vector<TraceResult> results(components.size());
    std::vector<std::exception_ptr> errors(components.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < components.size(); i = next++) {
            try {
                results[i] = trace_component(components[i], options);
                const std::string base = (std::filesystem::path(cmd.out_dir) / (stem + "_" + std::to_string(i))).string();
                write_file_atomic(base + ".path.json", path_to_json(results[i].emitted.path) + "\n");
                if (cmd.emit_graph) write_file_atomic(base + ".graph.json", curve_graph_to_json(results[i].graph) + "\n");
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned hw = cmd.jobs ? cmd.jobs : std::max(1u, std::thread::hardware_concurrency());
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(components.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        std::set<GridPoint> distinct(r.emitted.path.points.begin(), r.emitted.path.points.end());
        std::cout << stem << "_" << i << ".path.json: " << r.emitted.path.size() << " points (" << distinct.size()
                  << " distinct), " << (r.emitted.path.closed ? "closed" : "open") << ", " << r.graph.vertices.size()
                  << " vertices, " << r.toured.edges.size() << " edges toured, duplicated weight "
                  << r.toured.duplicated_weight() << "\n";
    }
    if (!cmd.svg.empty()) write_file_atomic(cmd.svg, trace_svg(image, results));
    return kExitOk;
}

struct CoverCommand {
    PathOptions path;
    PredicateOptions predicate;
    bool forward = false;
    bool oracle = false;
    std::string svg;
    std::string out;
};

int run_cover(const CoverCommand& cmd) {
    const PredicateSpec spec = parse_spec(cmd.predicate);
    const DigitalPath path = load_path(cmd.path);
    const auto predicate = make_predicate(spec, path);
    SaturatedCover cover = cmd.forward ? forward_cover(path, *predicate) : ssd_cover(path, *predicate);
    cover.predicate = spec;
    emit_output(cmd.out, cover_to_json(cover));
    if (!cmd.svg.empty()) write_file_atomic(cmd.svg, cover_svg(path, cover));
    if (cmd.oracle) {
        const auto brute = brute_force_cover(path, *predicate);
        if (brute.segments != cover.segments) {
            std::cerr << "oracle mismatch: brute force found " << brute.segments.size() << " segments, "
                      << (cmd.forward ? "forward" : "ssd") << " found " << cover.segments.size() << "\n";
            for (const auto& s : brute.segments) {
                if (!std::binary_search(cover.segments.begin(), cover.segments.end(), s)) {
                    std::cerr << "  missing " << to_string(s) << "\n";
                }
            }
            for (const auto& s : cover.segments) {
                if (!std::binary_search(brute.segments.begin(), brute.segments.end(), s)) {
                    std::cerr << "  spurious " << to_string(s) << "\n";
                }
            }
            return kExitMismatch;
        }
        std::cerr << "oracle: " << brute.segments.size() << " segments agree\n";
    }
    return kExitOk;
}

struct GraphCommand {
    PathOptions path;
    PredicateOptions predicate;
    bool forward = false;
    std::string out;
    std::string dot;
};

int run_graph(const GraphCommand& cmd) {
    const PredicateSpec spec = parse_spec(cmd.predicate);
    const DigitalPath path = load_path(cmd.path);
    const auto predicate = make_predicate(spec, path);
    const SaturatedCover cover = cmd.forward ? forward_cover(path, *predicate) : ssd_cover(path, *predicate);
    const ArcGraph graph = build_arc_graph(cover);
    emit_output(cmd.out, arc_graph_to_json(graph));
    if (!cmd.dot.empty()) write_file_atomic(cmd.dot, arc_graph_to_dot(graph));
    return kExitOk;
}

struct VerifyCommand {
    std::uint64_t seed = 1;
    std::size_t sizes = 200;
    std::size_t paths = 1000;
    std::size_t trials = 10000;
    PredicateOptions predicate;
};

int run_verify(const VerifyCommand& cmd) {
    VerifyOptions options;
    options.seed = cmd.seed;
    options.max_points = cmd.sizes;
    options.paths = cmd.paths;
    options.conservativity_trials = cmd.trials;
    if (!cmd.predicate.name.empty()) options.predicates.push_back(parse_spec(cmd.predicate));
    if (options.max_points == 0) throw InputError("--sizes must be positive");
    if (options.max_points > kBruteForceDefaultCap) {
        throw CapacityError("--sizes " + std::to_string(options.max_points) + " exceeds the brute force cap of " +
                            std::to_string(kBruteForceDefaultCap));
    }

    bool all = true;
    for (const auto& report : run_verification(options)) {
        std::cout << (report.pass ? "PASS " : "FAIL ") << report.name << " (" << report.checked << " checks)\n";
        if (!report.pass) {
            std::cout << "  counterexample: " << report.counterexample << "\n";
            all = false;
        }
    }
    return all ? kExitOk : kExitFailure;
}

struct ProbeCommand {
    PredicateOptions predicate;
    std::vector<std::size_t> sizes{1000, 10000, 100000};
    std::string shape = "circle";
    std::uint64_t seed = 1;
};

int run_probe(const ProbeCommand& cmd) {
    PredicateOptions popts = cmd.predicate;
    if (popts.name.empty()) popts.name = "dss";
    const PredicateSpec spec = parse_spec(popts);
    ProbeShape shape = ProbeShape::Circle;
    if (cmd.shape == "line") {
        shape = ProbeShape::Line;
    } else if (cmd.shape == "walk") {
        shape = ProbeShape::Walk;
    } else if (cmd.shape != "circle") {
        throw InputError("--shape must be circle, line or walk");
    }
    const auto rows = complexity_probe(spec, cmd.sizes, shape, cmd.seed);
    std::cout << std::setw(10) << "requested" << std::setw(10) << "points" << std::setw(14) << "calls" << std::setw(10)
              << "segments" << std::setw(12) << "calls/pt" << std::setw(12) << "seconds" << "\n";
    for (const auto& r : rows) {
        std::cout << std::setw(10) << r.requested << std::setw(10) << r.points << std::setw(14) << r.predicate_calls
                  << std::setw(10) << r.segments << std::setw(12) << std::fixed << std::setprecision(3)
                  << r.calls_per_point() << std::setw(12) << std::setprecision(4) << r.seconds << "\n";
    }
    std::cout << "spread " << std::setprecision(4) << calls_ratio_spread(rows) << "\n";
    return kExitOk;
}

void add_path_options(CLI::App* cmd, PathOptions& options) {
    cmd->add_option("path", options.input, "Path JSON file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--adjacency", options.adjacency, "Override the path adjacency: 4, 8 or index");
    cmd->add_flag("--closed", options.closed, "Treat the path as closed");
}

void add_predicate_options(CLI::App* cmd, PredicateOptions& options, bool required) {
    auto* opt = cmd->add_option("--predicate", options.name, "Predicate name (see --list-predicates)");
    if (required) opt->required();
    cmd->add_option("--param", options.params, "Predicate parameter k=v (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saturated sub-path covers of digital paths, and tracing of binary images into paths"};
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list-predicates", list, "List registered predicates and exit");

    TraceCommand trace;
    auto* trace_cmd = app.add_subcommand("trace", "Trace each connected component of a PBM image into a path");
    trace_cmd->add_option("image", trace.image, "PBM image (P1 or P4)")->required()->check(CLI::ExistingFile);
    trace_cmd->add_option("--adjacency", trace.adjacency, "4 or 8")->capture_default_str();
    trace_cmd->add_option("--out", trace.out_dir, "Output directory")->capture_default_str();
    trace_cmd->add_flag("--emit-graph", trace.emit_graph, "Also write the curve graph of each component");
    trace_cmd->add_option("--svg", trace.svg, "Render image, junctions and paths to this SVG file");
    trace_cmd->add_flag("--cpp-always", trace.cpp_always, "Always close the route, even with two odd vertices");
    trace_cmd->add_option("--jobs", trace.jobs, "Worker threads (default: hardware concurrency)");

    CoverCommand cover;
    auto* cover_cmd = app.add_subcommand("cover", "Compute all saturated sub-paths of a path");
    add_path_options(cover_cmd, cover.path);
    add_predicate_options(cover_cmd, cover.predicate, true);
    cover_cmd->add_flag("--forward", cover.forward, "Use the forward-only sweep");
    cover_cmd->add_flag("--oracle", cover.oracle, "Cross-check against brute force");
    cover_cmd->add_option("--svg", cover.svg, "Render the segments to this SVG file");
    cover_cmd->add_option("--out", cover.out, "Output file (default stdout)");

    GraphCommand graph;
    auto* graph_cmd = app.add_subcommand("graph", "Arc graph of the saturated sub-paths of a path");
    add_path_options(graph_cmd, graph.path);
    add_predicate_options(graph_cmd, graph.predicate, true);
    graph_cmd->add_flag("--forward", graph.forward, "Use the forward-only sweep");
    graph_cmd->add_option("--out", graph.out, "Output file (default stdout)");
    graph_cmd->add_option("--dot", graph.dot, "Also write a DOT file");

    VerifyCommand verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the randomized invariant suite");
    verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--sizes", verify.sizes, "Maximum number of points per path")->capture_default_str();
    verify_cmd->add_option("--paths", verify.paths, "Number of random paths")->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Conservativity trials per predicate")->capture_default_str();
    add_predicate_options(verify_cmd, verify.predicate, false);

    ProbeCommand probe;
    auto* probe_cmd = app.add_subcommand("probe", "Count predicate calls on synthetic paths of growing size");
    add_predicate_options(probe_cmd, probe.predicate, false);
    probe_cmd->add_option("--sizes", probe.sizes, "Requested path sizes")->delimiter(',');
    probe_cmd->add_option("--shape", probe.shape, "circle, line or walk")->capture_default_str();
    probe_cmd->add_option("--seed", probe.seed, "Random seed for walks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (list) return list_predicates();
        if (*trace_cmd) return run_trace(trace);
        if (*cover_cmd) return run_cover(cover);
        if (*graph_cmd) return run_graph(graph);
        if (*verify_cmd) return run_verify(verify);
        if (*probe_cmd) return run_probe(probe);
        std::cout << app.help();
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
