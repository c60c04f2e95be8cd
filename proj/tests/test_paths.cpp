#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "mono/catalog.hpp"
#include "mono/generators.hpp"
#include "mono/paths.hpp"
#include "support/oracles.hpp"

using namespace mono;

namespace {

PathSample path_of(const std::function<Vector(double)>& phi, std::size_t knots) {
    std::vector<PathKnot> out;
    for (std::size_t k = 0; k < knots; ++k) {
        const double t =
            static_cast<double>(k) / static_cast<double>(knots - 1);
        out.push_back({t, phi(t)});
    }
    out.back().t = 1.0;
    return PathSample(std::move(out));
}

PathSample staircase_path() {
    // Three affine pieces through (-1,-1) -> (0,-1) -> (0,1) -> (1,1).
    std::vector<PathKnot> knots;
    int i = 0;
    for (double s = 0.0; s < 1.001; s += 0.25)
        knots.push_back({i++ * 0.01, {-1.0 + s, -1.0}});
    for (double s = 0.25; s < 2.001; s += 0.25)
        knots.push_back({i++ * 0.01, {0.0, -1.0 + s}});
    for (double s = 0.25; s < 1.001; s += 0.25)
        knots.push_back({i++ * 0.01, {0.0 + s, 1.0}});
    for (std::size_t k = 0; k < knots.size(); ++k)
        knots[k].t = static_cast<double>(k) /
                     static_cast<double>(knots.size() - 1);
    knots.back().t = 1.0;
    return PathSample(std::move(knots));
}

PathSample trace_of_staircase(std::uint64_t seed, std::size_t points = 21) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::monotone_pwl;
    spec.seed = seed;
    spec.params = {{"points", static_cast<double>(points)}};
    return path_from_graph_order(generate_random(spec).graph);
}

}  // namespace

TEST_CASE("path validation enforces the invariants") {
    CHECK_THROWS_AS(PathSample({{0.0, {0.0, 0.0}}}), ContractError);
    CHECK_THROWS_AS(PathSample({{0.0, {0.0, 0.0}}, {0.5, {1.0, 1.0}}}),
                    ContractError);  // last t != 1
    CHECK_THROWS_AS(PathSample({{0.2, {0.0, 0.0}}, {1.0, {1.0, 1.0}}}),
                    ContractError);  // first t != 0
    CHECK_THROWS_AS(
        PathSample({{0.0, {0.0, 0.0}}, {0.5, {1.0, 1.0}}, {0.5, {2.0, 2.0}}}),
        ContractError);  // t not strictly increasing
    CHECK_THROWS_AS(
        PathSample({{0.0, {0.0, 0.0}}, {0.5, {1.0, 1.0}}, {1.0, {0.0, 0.0}}}),
        ContractError);  // revisits a point
    const PathSample ok({{0.0, {0.0, 0.0}}, {0.4, {1.0, 0.5}}, {1.0, {2.0, 1.0}}});
    CHECK(ok.t_mesh() == doctest::Approx(0.6));
    CHECK(ok.image_mesh() == doctest::Approx(std::sqrt(1.25)));
}

TEST_CASE("parabola path is locally monotone in the image") {
    const PathSample p =
        path_of([](double t) { return Vector{t, t * t}; }, 101);
    const CheckReport report = check_local_monotone_image(p, 0.2);
    CHECK(report.status == Status::holds);
    CHECK(*report.min_margin >= 0.0);
}

TEST_CASE("antitone path is refuted on an adjacent pair") {
    const PathSample p = path_of([](double t) { return Vector{t, -t}; }, 101);
    const CheckReport report = check_local_monotone_image(p, 0.2);
    REQUIRE(report.status == Status::refuted);
    CHECK(report.center_index == 0);
    CHECK(report.witness == IndexPair{0, 1});
    CHECK(*report.margin == doctest::Approx(-1e-4));
}

TEST_CASE("vertical path has identically zero products") {
    const PathSample p = path_of([](double t) { return Vector{0.0, t}; }, 51);
    const CheckReport report = check_local_monotone_image(p, 0.1);
    CHECK(report.status == Status::holds);
    CHECK(*report.min_margin == 0.0);
}

TEST_CASE("staircase components are both nondecreasing") {
    const ComponentClasses classes = component_monotonicity(staircase_path());
    CHECK(classes.phi1 == ComponentClass::nondecreasing);
    CHECK(classes.phi2 == ComponentClass::nondecreasing);
}

TEST_CASE("affine-decreasing / constant classification") {
    const PathSample p =
        path_of([](double t) { return Vector{1.0 - t, 7.0}; }, 41);
    const ComponentClasses classes = component_monotonicity(p);
    CHECK(classes.phi1 == ComponentClass::nonincreasing);
    CHECK(classes.phi2 == ComponentClass::constant);
}

TEST_CASE("a sine sweep is unclassifiable and fails the image precondition") {
    // The pure sine path revisits (0,0); a 1e-6 vertical tilt keeps the
    // sample injective without changing the classes at coarse tolerance.
    const PathSample p = path_of(
        [](double t) {
            return Vector{std::sin(2.0 * std::numbers::pi * t), 1e-6 * t};
        },
        101);
    const ComponentClasses classes = component_monotonicity(p, 1e-4);
    CHECK(classes.phi1 == ComponentClass::none);
    CHECK(classes.phi2 == ComponentClass::constant);
    CHECK(check_local_monotone_image(p, 3.0 * p.image_mesh(), 1e-9).status ==
          Status::refuted);
}

TEST_CASE("endpoint extremality holds on the staircase") {
    const PathSample p = staircase_path();
    const CheckReport report =
        endpoint_extremality(p, 3.0 * p.image_mesh());
    CHECK(report.status == Status::holds);
}

TEST_CASE("constant-x path exercises the constant branch") {
    const PathSample p = path_of([](double t) { return Vector{0.0, t}; }, 51);
    const CheckReport report = endpoint_extremality(p, 0.1);
    CHECK(report.status == Status::holds);
}

TEST_CASE("a folded path is inconclusive for extremality") {
    const PathSample p = path_of(
        [](double t) { return Vector{t * (1.0 - t), t}; }, 101);
    const CheckReport report =
        endpoint_extremality(p, 3.0 * p.image_mesh());
    CHECK(report.status == Status::inconclusive);
    CHECK(report.center_index.has_value());
    CHECK_FALSE(report.detail.empty());
}

TEST_CASE("extrema are reported when an interior knot escapes") {
    // Rise then fall: phi1(0) < phi1(1) but the max is interior.
    std::vector<PathKnot> knots;
    const std::vector<double> xs{0.0, 0.4, 0.8, 1.0, 0.9};
    const std::vector<double> ys{0.0, 0.4, 0.8, 1.0, 1.2};
    for (std::size_t k = 0; k < xs.size(); ++k)
        knots.push_back(
            {static_cast<double>(k) / 4.0, {xs[k], ys[k]}});
    const PathSample p(std::move(knots));
    // A small window keeps the turn outside every local scan, so the image
    // precondition holds and the interior escape is caught by extremality.
    const CheckReport report = endpoint_extremality(p, 0.2, 1e-9);
    CHECK(report.status == Status::refuted);
    CHECK(report.detail.find("exceeds the end value") != std::string::npos);
}

TEST_CASE("univariate harness agrees on staircase traces") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::monotone_pwl;
    spec.seed = 42;
    const SampledGraph g = generate_random(spec).graph;
    const PathSample trace = path_from_graph_order(g);
    const CheckReport report = univariate_global_from_local(g, trace);
    CHECK(report.status == Status::holds);
    CHECK_FALSE(report.theorem_violation);
}

TEST_CASE("univariate harness rejects off-graph trace knots") {
    SamplingSpec grid;
    grid.window = {{-1.0, 1.0, 0.5}};
    const SampledGraph g =
        sample_operator(catalog_operator("remark-4.6"), grid).graph;
    // A bridge knot between the two branches is not a graph point.
    std::vector<PathKnot> knots;
    knots.push_back({0.0, {-1.0, 0.0}});
    knots.push_back({0.25, {0.0, 0.0}});
    knots.push_back({0.5, {0.25, -0.5}});
    knots.push_back({0.75, {0.5, -1.0}});
    knots.push_back({1.0, {1.0, -1.0}});
    CHECK_THROWS_AS(
        univariate_global_from_local(g, PathSample(std::move(knots))),
        ContractError);
}

TEST_CASE("univariate harness on a monotone line") {
    SamplingSpec grid;
    grid.window = {{-1.0, 1.0, 0.1}};
    const SampledGraph g =
        sample_operator(catalog_operator("linear", {{"slope", 2.0}}), grid)
            .graph;
    const PathSample trace = path_from_graph_order(g);
    const CheckReport report = univariate_global_from_local(g, trace);
    CHECK(report.status == Status::holds);
    CHECK(report.detail.find("agree") != std::string::npos);
}

TEST_CASE("harness is inconclusive when the trace is not locally monotone") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::step;
    spec.seed = 3;
    spec.params = {{"points", 41.0}};
    const SampledGraph g = generate_random(spec).graph;
    const PathSample trace = path_from_graph_order(g);
    const CheckReport report = univariate_global_from_local(g, trace);
    CHECK(report.status == Status::inconclusive);
    CHECK_FALSE(report.theorem_violation);
}

TEST_CASE("randomized staircases: classes, extremality, no theorem violation") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::monotone_pwl;
        spec.seed = seed;
        spec.params = {{"points", 15.0}};
        const SampledGraph g = generate_random(spec).graph;
        const PathSample trace = path_from_graph_order(g);
        const double window = 3.0 * trace.image_mesh();

        REQUIRE(check_local_monotone_image(trace, window).status ==
                Status::holds);
        const ComponentClasses classes = component_monotonicity(trace);
        REQUIRE((classes.phi1 == ComponentClass::nondecreasing ||
                 classes.phi1 == ComponentClass::constant));
        REQUIRE((classes.phi2 == ComponentClass::nondecreasing ||
                 classes.phi2 == ComponentClass::constant));
        REQUIRE(endpoint_extremality(trace, window).status == Status::holds);

        const CheckReport harness = univariate_global_from_local(g, trace);
        REQUIRE_FALSE(harness.theorem_violation);
        REQUIRE(harness.status == Status::holds);
    }
}

TEST_CASE("path JSON round trip and validation") {
    const PathSample p = staircase_path();
    const PathSample back = path_from_json_string(path_to_json_string(p));
    REQUIRE(back.size() == p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(back.knots()[k].t == p.knots()[k].t);
        CHECK(back.knots()[k].p == p.knots()[k].p);
    }
    CHECK_THROWS_AS(path_from_json_string("{}"), ParseError);
    CHECK_THROWS_AS(path_from_json_string(R"({"knots": [{"t": 0}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        path_from_json_string(
            R"({"knots": [{"t": 0.5, "p": [0, 0]}, {"t": 1, "p": [1, 1]}]})"),
        ParseError);
}
