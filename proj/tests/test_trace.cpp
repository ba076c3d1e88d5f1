#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tcover/curve_graph.hpp"
#include "tcover/error.hpp"
#include "tcover/image.hpp"
#include "tcover/trace.hpp"

using namespace tcover;
using tcover::testing::check_trace;
using tcover::testing::image_from_ascii;
using tcover::testing::min_postman_weight;
using tcover::testing::trace_fixtures;

namespace {

CurveGraph graph_of(const std::vector<std::string>& rows, Adjacency a) { return build_curve_graph(image_from_ascii(rows), a); }

/// Random multigraph on `n` vertices with a spanning path and extra edges.
CurveGraph random_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
    CurveGraph g;
    g.adjacency = Adjacency::Eight;
    g.vertices.resize(n);
    for (std::size_t v = 0; v < n; ++v) g.vertices[v].pixels = {{static_cast<std::int64_t>(v) * 100, 0}};
    auto add = [&](std::size_t u, std::size_t v) {
        CurveEdge e;
        e.u = std::min(u, v);
        e.v = std::max(u, v);
        e.pixels.resize(std::uniform_int_distribution<std::size_t>(0, 6)(rng), GridPoint{0, 1});
        g.edges.push_back(e);
    };
    for (std::size_t v = 1; v < n; ++v) add(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    for (std::size_t i = 0; i < extra; ++i) {
        add(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    }
    return g;
}

}  // namespace

TEST_CASE("P1 example") {
    const auto image = load_image("P1\n# comment\n3 2\n0 1 0\n1 1 1\n");
    CHECK(image.width() == 3);
    CHECK(image.height() == 2);
    CHECK(image.count() == 4);
    CHECK(image.contains({1, 0}));
    CHECK_FALSE(image.contains({0, 0}));
    CHECK(image.contains({2, 1}));
    CHECK_FALSE(image.contains({5, 5}));
    CHECK(load_image("P1 3 2 010111") == image);
}

TEST_CASE("blank image has no components") {
    const auto image = load_image("P1\n4 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK(image.count() == 0);
    CHECK(split_components(image, Adjacency::Eight).empty());
    CHECK(trace_image(image, {}).empty());
}

TEST_CASE("P1 and P4 round trip") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t w = std::uniform_int_distribution<std::int64_t>(1, 19)(rng);
        const std::int64_t h = std::uniform_int_distribution<std::int64_t>(1, 7)(rng);
        BinaryImage image(w, h);
        for (std::int64_t y = 0; y < h; ++y) {
            for (std::int64_t x = 0; x < w; ++x) {
                if (rng() % 3 == 0) image.set({x, y});
            }
        }
        const auto p1 = load_image(write_pbm(image, PbmFormat::P1));
        const auto p4 = load_image(write_pbm(image, PbmFormat::P4));
        CHECK(p1 == image);
        CHECK(p4 == image);
    }
}

TEST_CASE("malformed images are rejected") {
    CHECK_THROWS_AS(load_image(""), InputError);
    CHECK_THROWS_AS(load_image("P2\n2 2\n0 0 0 0\n"), InputError);
    CHECK_THROWS_AS(load_image("P1\n2 2\n0 1 1\n"), InputError);
    CHECK_THROWS_AS(load_image("P1\n2 2\n0 1 2 0\n"), InputError);
    CHECK_THROWS_AS(load_image("P1\n0 2\n"), InputError);
    CHECK_THROWS_AS(load_image("P1\n-1 2\n"), InputError);
    CHECK_THROWS_AS(load_image(std::string("P4\n9 2\n\x01", 8)), InputError);
    CHECK_THROWS_AS(load_image_file("/nonexistent/image.pbm"), InputError);
}

TEST_CASE("neighbourhoods") {
    CHECK(neighbourhood({0, 0}, Adjacency::Four).size() == 4);
    CHECK(neighbourhood({0, 0}, Adjacency::Eight).size() == 8);
    CHECK_THROWS_AS(neighbourhood({0, 0}, Adjacency::IndexOnly), InputError);
}

TEST_CASE("branching index examples") {
    const auto single = image_from_ascii({"...", ".#.", "..."});
    CHECK(branching_index(single, {1, 1}, Adjacency::Eight) == 0);
    CHECK(classify(single, {1, 1}, Adjacency::Eight).kind == PixelKind::Isolated);
    const auto run = image_from_ascii({"###"});
    CHECK(branching_index(run, {1, 0}, Adjacency::Four) == 2);
    CHECK(classify(run, {1, 0}, Adjacency::Four).kind == PixelKind::Regular);
    CHECK(classify(run, {0, 0}, Adjacency::Four).kind == PixelKind::End);
    const auto plus = image_from_ascii({".#.", "###", ".#."});
    CHECK(branching_index(plus, {1, 1}, Adjacency::Four) == 4);
    CHECK(classify(plus, {1, 1}, Adjacency::Four).kind == PixelKind::Branching);
    CHECK(branching_index(plus, {0, 1}, Adjacency::Eight) == 3);
    CHECK_THROWS_AS(branching_index(plus, {0, 0}, Adjacency::Four), std::invalid_argument);
}

TEST_CASE("junction examples") {
    const auto plus = find_junctions(image_from_ascii({".#.", "###", ".#."}), Adjacency::Four);
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].pixels == std::vector<GridPoint>{{1, 1}});
    CHECK(plus[0].branching_index == 4);
    const auto corridor = find_junctions(image_from_ascii({".#......#.", "##########", ".#......#."}), Adjacency::Four);
    REQUIRE(corridor.size() == 2);
    CHECK(corridor[0].branching_index == 4);
    CHECK(corridor[1].branching_index == 4);
    CHECK(find_junctions(image_from_ascii({"#####"}), Adjacency::Eight).empty());
}

TEST_CASE("curve graph examples") {
    const auto segment = graph_of({"#####"}, Adjacency::Eight);
    REQUIRE(segment.vertices.size() == 2);
    REQUIRE(segment.edges.size() == 1);
    CHECK(segment.edges[0].pixels.size() == 3);
    CHECK(segment.vertices[0].kind == VertexKind::End);

    const auto plus = graph_of({".#.", "###", ".#."}, Adjacency::Four);
    std::size_t ends = 0, junctions = 0;
    for (const auto& v : plus.vertices) {
        ends += v.kind == VertexKind::End;
        junctions += v.kind == VertexKind::Junction;
    }
    CHECK(ends == 4);
    CHECK(junctions == 1);
    CHECK(plus.edges.size() == 4);
    for (const auto& e : plus.edges) CHECK(e.pixels.empty());

    const auto eight = graph_of(trace_fixtures()[5].rows, Adjacency::Eight);
    REQUIRE(eight.vertices.size() == 1);
    CHECK(eight.vertices[0].kind == VertexKind::Junction);
    REQUIRE(eight.edges.size() == 2);
    for (const auto& e : eight.edges) CHECK(e.u == e.v);
    CHECK(eight.degree(0) == 4);

    const auto cycle = graph_of({".###.", "#...#", "#...#", "#...#", ".###."}, Adjacency::Eight);
    REQUIRE(cycle.vertices.size() == 1);
    CHECK(cycle.vertices[0].kind == VertexKind::Cycle);
    REQUIRE(cycle.edges.size() == 1);
    CHECK(cycle.edges[0].pixels.size() == 11);

    const auto dot = graph_of({"#"}, Adjacency::Four);
    REQUIRE(dot.vertices.size() == 1);
    CHECK(dot.vertices[0].kind == VertexKind::Isolated);
    CHECK(dot.edges.empty());

    CHECK_THROWS_AS(graph_of({"#.#"}, Adjacency::Eight), InputError);
}

TEST_CASE("curve graph partitions the pixels and edges attach correctly") {
    for (const auto& f : trace_fixtures()) {
        const auto image = image_from_ascii(f.rows);
        for (const auto& component : split_components(image, f.adjacency)) {
            const auto g = build_curve_graph(component, f.adjacency);
            std::multiset<GridPoint> seen;
            for (const auto& v : g.vertices) seen.insert(v.pixels.begin(), v.pixels.end());
            for (const auto& e : g.edges) {
                seen.insert(e.pixels.begin(), e.pixels.end());
                CHECK(std::count(g.vertices[e.u].pixels.begin(), g.vertices[e.u].pixels.end(), e.u_attach) == 1);
                CHECK(std::count(g.vertices[e.v].pixels.begin(), g.vertices[e.v].pixels.end(), e.v_attach) == 1);
                std::vector<GridPoint> chain{e.u_attach};
                chain.insert(chain.end(), e.pixels.begin(), e.pixels.end());
                chain.push_back(e.v_attach);
                for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
                    if (chain[k] == chain[k + 1]) continue;
                    CHECK_MESSAGE(is_adjacent(chain[k], chain[k + 1], f.adjacency), f.name);
                }
            }
            const auto fg = component.foreground();
            CHECK_MESSAGE(std::multiset<GridPoint>(fg.begin(), fg.end()) == seen, f.name);
            // Junctions are maximal: no branching pixel outside them touches them.
            for (const auto& v : g.vertices) {
                if (v.kind != VertexKind::Junction) continue;
                for (const auto& p : v.pixels) {
                    CHECK(classify(component, p, f.adjacency).kind == PixelKind::Branching);
                    for (const auto& q : neighbourhood(p, f.adjacency)) {
                        if (!component.contains(q) || std::binary_search(v.pixels.begin(), v.pixels.end(), q)) continue;
                        CHECK(classify(component, q, f.adjacency).kind != PixelKind::Branching);
                    }
                }
            }
        }
    }
}

TEST_CASE("eulerize matches the exhaustive minimum on fixtures") {
    for (const auto& f : trace_fixtures()) {
        for (const auto& component : split_components(image_from_ascii(f.rows), f.adjacency)) {
            const auto g = build_curve_graph(component, f.adjacency);
            const auto e = eulerize(g);
            CHECK_MESSAGE(e.odd_vertices().empty(), f.name);
            CHECK_MESSAGE(e.duplicated_weight() == min_postman_weight(g), f.name);
            for (std::size_t i = 0; i < g.edges.size(); ++i) CHECK_FALSE(e.edges[i].duplicate_of);
        }
    }
}

TEST_CASE("eulerize matches the exhaustive minimum on random graphs") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(std::uniform_int_distribution<std::size_t>(1, 12)(rng),
                                    std::uniform_int_distribution<std::size_t>(0, 10)(rng), rng);
        const auto e = eulerize(g);
        CHECK(e.odd_vertices().empty());
        CHECK(e.duplicated_weight() == min_postman_weight(g));
        const auto tour = euler_tour(e, 0);
        CHECK(tour.size() == e.edges.size());
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < tour.size(); ++i) {
            used.insert(tour[i].edge);
            if (i) CHECK(step_from(e, tour[i]) == step_to(e, tour[i - 1]));
        }
        CHECK(used.size() == e.edges.size());
        if (!tour.empty()) {
            CHECK(step_from(e, tour.front()) == 0);
            CHECK(step_to(e, tour.back()) == 0);
        }
    }
}

TEST_CASE("eulerize leaves cycles alone and doubles a segment") {
    const auto cycle = graph_of({".###.", "#...#", "#...#", "#...#", ".###."}, Adjacency::Eight);
    CHECK(eulerize(cycle).edges.size() == 1);
    const auto segment = graph_of({"#####"}, Adjacency::Eight);
    const auto e = eulerize(segment);
    REQUIRE(e.edges.size() == 2);
    CHECK(e.edges[1].duplicate_of == std::optional<std::size_t>(0));
    CHECK(e.duplicated_weight() == 5);
}

TEST_CASE("open trail between two odd vertices") {
    const auto segment = graph_of({"#####"}, Adjacency::Eight);
    const auto trail = euler_tour(segment, 0);
    REQUIRE(trail.size() == 1);
    CHECK(trail[0].forward);
    CHECK_THROWS_AS(euler_tour(segment, 5), std::invalid_argument);
}

TEST_CASE("too many odd vertices") {
    // 22 spikes along a bar: 22 end pixels plus a 4-connected bar of junctions.
    std::string top, bar;
    for (int i = 0; i < 22; ++i) {
        top += "#.";
        bar += "##";
    }
    const auto g = graph_of({top, bar, top}, Adjacency::Four);
    CHECK(g.odd_vertices().size() > kMaxOddVertices);
    CHECK_THROWS_AS(eulerize(g), CapacityError);
}

TEST_CASE("every fixture traces to a valid covering path") {
    for (const bool cpp_always : {false, true}) {
        for (const auto& f : trace_fixtures()) {
            const auto image = image_from_ascii(f.rows);
            const TraceOptions options{f.adjacency, cpp_always};
            const auto results = trace_image(image, options);
            const auto components = split_components(image, f.adjacency);
            REQUIRE(results.size() == components.size());
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto problem = check_trace(components[i], results[i]);
                CHECK_MESSAGE(problem.empty(), f.name << (cpp_always ? " (closed)" : "") << ": " << problem);
                const bool two_odd = results[i].graph.odd_vertices().size() == 2;
                if (cpp_always || !two_odd) {
                    if (results[i].emitted.path.size() > 1) CHECK_MESSAGE(results[i].emitted.path.closed, f.name);
                } else {
                    CHECK_FALSE(results[i].emitted.path.closed);
                }
            }
        }
    }
}

TEST_CASE("trace examples") {
    const auto segment = trace_image(image_from_ascii({"#####"}), {Adjacency::Eight, false});
    REQUIRE(segment.size() == 1);
    const std::vector<GridPoint> line{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    CHECK(segment[0].emitted.path.points == line);
    CHECK_FALSE(segment[0].emitted.path.closed);

    const auto plus = trace_image(image_from_ascii({".#.", "###", ".#."}), {Adjacency::Four, false});
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].emitted.path.closed);
    CHECK(plus[0].emitted.path.size() == 8);
    CHECK(plus[0].toured.duplicated_weight() == 8);

    const auto dot = trace_image(image_from_ascii({"#"}), {Adjacency::Eight, false});
    REQUIRE(dot.size() == 1);
    CHECK(dot[0].emitted.path.points == std::vector<GridPoint>{{0, 0}});
}

TEST_CASE("tracing is deterministic") {
    for (const auto& f : trace_fixtures()) {
        const auto image = image_from_ascii(f.rows);
        const auto a = trace_image(image, {f.adjacency, false});
        const auto b = trace_image(image, {f.adjacency, false});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].emitted.path.points == b[i].emitted.path.points);
    }
}

TEST_CASE("curve graph JSON") {
    const auto json = curve_graph_to_json(graph_of({"###"}, Adjacency::Eight));
    CHECK(json.find("\"kind\": \"end\"") != std::string::npos);
    CHECK(json.find("\"edges\"") != std::string::npos);
}
