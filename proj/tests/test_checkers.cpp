#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mono/catalog.hpp"
#include "mono/checkers.hpp"
#include "mono/generators.hpp"
#include "mono/geometry.hpp"
#include "mono/reports_json.hpp"
#include "support/oracles.hpp"

using namespace mono;

namespace {

SampledGraph sample1(const std::string& name, double lo, double hi,
                     double step,
                     const std::map<std::string, double>& params = {}) {
    SamplingSpec spec;
    spec.window = {{lo, hi, step}};
    return sample_operator(catalog_operator(name, params), spec).graph;
}

SampledGraph remark46_graph() { return sample1("remark-4.6", -1, 1, 0.5); }

SampledGraph random_step_graph(std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::step;
    spec.seed = seed;
    spec.params = {{"points", 200.0}};
    return generate_random(spec).graph;
}

}  // namespace

// ---------------------------------------------------------------------------
// check_global_monotone

TEST_CASE("example-5.1 pair from the text refutes global monotonicity") {
    SamplingSpec spec;
    spec.window = {{0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}};
    const SampledGraph g =
        sample_operator(catalog_operator("example-5.1"), spec).graph;
    REQUIRE(g.size() == 3);  // origin, (0,1), (1,0)
    const CheckReport report = check_global_monotone(g);
    CHECK(report.status == Status::refuted);
    REQUIRE(report.witness.has_value());
    CHECK(g.point(report.witness->first) ==
          GraphPoint{{0.0, 1.0}, {-1.0, 0.0}});
    CHECK(g.point(report.witness->second) ==
          GraphPoint{{1.0, 0.0}, {0.0, 2.0}});
    CHECK(*report.margin == -1.0);
}

TEST_CASE("identity samples hold with nonnegative margins") {
    const CheckReport report =
        check_global_monotone(sample1("identity", -3, 3, 0.25));
    CHECK(report.status == Status::holds);
    CHECK(*report.min_margin >= 0.0);
}

TEST_CASE("remark-4.6 sample refuted at the frozen witness") {
    const SampledGraph g = remark46_graph();
    const CheckReport report = check_global_monotone(g);
    CHECK(report.status == Status::refuted);
    CHECK(report.witness == IndexPair{0, 3});
    CHECK(*report.margin == -1.5);
    CHECK(report.pairs_checked == 10);

    const auto expected = oracle::first_violation(g.points(), 1e-9);
    REQUIRE(expected.has_value());
    CHECK(report.witness->first == expected->i);
    CHECK(report.witness->second == expected->j);
    CHECK(*report.margin == expected->margin_value);
}

TEST_CASE("empty graph is inconclusive, single point holds") {
    CHECK(check_global_monotone(SampledGraph(1, {})).status ==
          Status::inconclusive);
    const CheckReport one =
        check_global_monotone(SampledGraph(1, {{{1.0}, {5.0}}}));
    CHECK(one.status == Status::holds);
    CHECK(one.pairs_checked == 0);
}

TEST_CASE("tolerance separates refuted from held") {
    const SampledGraph g(1, {{{0.0}, {1e-12}}, {{1.0}, {0.0}}});
    CHECK(check_global_monotone(g, 1e-9).status == Status::holds);
    CHECK(check_global_monotone(g, 0.0).status == Status::refuted);
    CHECK_THROWS_AS(check_global_monotone(g, -1.0), ContractError);
}

TEST_CASE("global reports agree with the oracle on random graphs") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t count = 2 + rng.index(40);
        std::vector<GraphPoint> pts(count);
        for (GraphPoint& p : pts) {
            p.x = {rng.uniform(-2, 2)};
            p.y = {rng.uniform(-2, 2)};
        }
        const SampledGraph g(1, pts);
        const CheckReport report = check_global_monotone(g);
        const auto expected = oracle::first_violation(pts, 1e-9);
        if (expected) {
            REQUIRE(report.status == Status::refuted);
            CHECK(report.witness == IndexPair{expected->i, expected->j});
            CHECK(*report.margin == expected->margin_value);
        } else {
            REQUIRE(report.status == Status::holds);
        }
        CHECK(report.min_margin == oracle::min_margin(pts));
    }
}

TEST_CASE("verdicts are identical across thread counts") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SampledGraph g = random_step_graph(seed);
        const std::vector<std::size_t> idx = all_indices(g.size());
        const nlohmann::ordered_json base =
            to_json(check_global_monotone(g, 1e-9, 1));
        for (int threads : {2, 8}) {
            const nlohmann::ordered_json other =
                to_json(check_global_monotone(g, 1e-9, threads));
            REQUIRE(base.dump() == other.dump());
        }
        const MonotoneScan serial = monotone_scan_serial(g, idx, 1e-9);
        const MonotoneScan parallel = monotone_scan(g, idx, 1e-9, 8);
        CHECK(serial.min_margin == parallel.min_margin);
        CHECK(serial.violation == parallel.violation);
        CHECK(serial.pairs == parallel.pairs);
    }
}

// ---------------------------------------------------------------------------
// check_local_monotone / local_radius

TEST_CASE("remark-4.6 is locally monotone near the origin") {
    const SampledGraph g = remark46_graph();
    const CheckReport report =
        check_local_monotone(g, {g.point(2), 0.9});
    CHECK(report.status == Status::holds);
    CHECK(report.subset_size == 2);  // (-0.5,0) and (0,0)
}

TEST_CASE("single-point restriction holds, empty restriction inconclusive") {
    const SampledGraph g = remark46_graph();
    const CheckReport one = check_local_monotone(g, {g.point(0), 0.1});
    CHECK(one.status == Status::holds);
    CHECK(one.subset_size == 1);
    const CheckReport none =
        check_local_monotone(g, {{{100.0}, {100.0}}, 0.1});
    CHECK(none.status == Status::inconclusive);
    CHECK(none.subset_size == 0);
}

TEST_CASE("the step-3 cross pair of example-5.1 has margin 0.06") {
    const GraphPoint p{{0.2, 0.0}, {0.0, 0.0}};
    const GraphPoint q{{0.0, 0.3}, {-0.3, 0.0}};
    CHECK(monotonicity_margin(p, q) == doctest::Approx(0.06));
    CHECK(monotonicity_margin(p, q) >= 0.0);
}

TEST_CASE("restriction of a globally monotone graph always holds") {
    oracle::Rng rng(77);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::monotone_pwl;
        spec.seed = seed;
        spec.params = {{"points", 21.0}};
        const SampledGraph g = generate_random(spec).graph;
        REQUIRE(check_global_monotone(g).status == Status::holds);
        for (int probe = 0; probe < 5; ++probe) {
            const NeighborhoodSpec window{g.point(rng.index(g.size())),
                                          rng.uniform(0.05, 3.0)};
            const CheckReport local = check_local_monotone(g, window);
            REQUIRE(local.status != Status::refuted);
        }
    }
}

TEST_CASE("local radius on the remark-4.6 sample") {
    const SampledGraph g = remark46_graph();
    const double rho = local_radius(g, 2);
    CHECK(rho == 1.0);  // the violating point enters at sqrt(1.25)
    CHECK(rho > 0.9);
    CHECK(rho < std::sqrt(1.25));
    CHECK(rho == oracle::local_radius(g.points(), 2, 1e-9));
}

TEST_CASE("local radius sentinel and zero cases") {
    CHECK(std::isinf(local_radius(sample1("identity", -1, 1, 0.5), 2)));
    // Nearest neighbor already violates.
    const SampledGraph bad(1, {{{0.0}, {0.0}}, {{0.1}, {-1.0}}});
    CHECK(local_radius(bad, 0) == 0.0);
}

TEST_CASE("local radius equals the radius-sweep oracle on random graphs") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 2 + rng.index(25);
        std::vector<GraphPoint> pts(count);
        for (GraphPoint& p : pts) {
            p.x = {rng.uniform(-2, 2)};
            p.y = {rng.uniform(-2, 2)};
        }
        const SampledGraph g(1, pts);
        const std::size_t center = rng.index(count);
        CHECK(local_radius(g, center) ==
              oracle::local_radius(pts, center, 1e-9));
    }
}

// ---------------------------------------------------------------------------
// hypomonotonicity_modulus

TEST_CASE("monotone samples have modulus zero") {
    const ModulusEstimate est =
        hypomonotonicity_modulus(sample1("identity", -1, 1, 0.1));
    CHECK(est.r_hat == 0.0);
    CHECK_FALSE(est.attaining_pair.has_value());
}

TEST_CASE("linear slope -2 has modulus exactly 2") {
    const ModulusEstimate est = hypomonotonicity_modulus(
        sample1("linear", -1, 1, 0.25, {{"slope", -2.0}}));
    CHECK(est.r_hat == 2.0);
}

TEST_CASE("remark-4.6 modulus is 2 at the jump") {
    const SampledGraph g = remark46_graph();
    const ModulusEstimate est = hypomonotonicity_modulus(g);
    CHECK(est.r_hat == 2.0);
    CHECK(est.attaining_pair == IndexPair{2, 3});
    CHECK(est.r_hat == oracle::modulus(g.points()));
}

TEST_CASE("truncated vertical-segment operator has modulus 2M") {
    for (double M : {1.0, 10.0, 100.0}) {
        const SampledGraph g = sample1("remark-6.4-2-truncated", 0, 1, 1,
                                       {{"M", M}, {"resolution", 9.0}});
        const ModulusEstimate est = hypomonotonicity_modulus(g);
        CHECK(est.r_hat == doctest::Approx(2.0 * M).epsilon(1e-9));
    }
}

TEST_CASE("vertical graphs skip every pair") {
    const SampledGraph g(1, {{{0.0}, {-1.0}}, {{0.0}, {0.0}}, {{0.0}, {1.0}}});
    const ModulusEstimate est = hypomonotonicity_modulus(g);
    CHECK(est.r_hat == 0.0);
    CHECK(est.all_pairs_skipped);
    CHECK(est.pairs_used == 0);
}

TEST_CASE("shifting a single-slope graph moves the modulus linearly") {
    for (double slope : {-3.0, -1.0, 0.5}) {
        for (double r : {0.5, 2.0, 4.0}) {
            const SampledGraph base =
                sample1("linear", -1, 1, 0.25, {{"slope", slope}});
            std::vector<GraphPoint> shifted = base.points();
            for (GraphPoint& p : shifted) p.y[0] += r * p.x[0];
            const double expect =
                std::max(0.0, hypomonotonicity_modulus(base).r_hat - r);
            const double got =
                hypomonotonicity_modulus(SampledGraph(1, shifted)).r_hat;
            CHECK(got == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("shifting by the estimated modulus restores monotonicity") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::hypo_shift;
        spec.seed = seed;
        spec.params = {{"r", 3.0}, {"points", 21.0}};
        const SampledGraph g = generate_random(spec).graph;
        const double r_hat = hypomonotonicity_modulus(g).r_hat;
        CHECK(r_hat == oracle::modulus(g.points()));
        std::vector<GraphPoint> shifted = g.points();
        for (GraphPoint& p : shifted) p.y[0] += r_hat * p.x[0];
        CHECK(check_global_monotone(SampledGraph(1, shifted)).status ==
              Status::holds);
    }
}

TEST_CASE("hypo-shift with r=2 on the identity base estimates 1") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::hypo_shift;
    spec.seed = 11;
    spec.params = {{"r", 2.0}, {"identity_base", 1.0}};
    const SampledGraph g = generate_random(spec).graph;
    CHECK(hypomonotonicity_modulus(g).r_hat == doctest::Approx(1.0));
}

TEST_CASE("modulus scans are identical across thread counts") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SampledGraph g = random_step_graph(seed + 100);
        const std::vector<std::size_t> idx = all_indices(g.size());
        const ModulusScan serial = modulus_scan_serial(g, idx);
        for (int threads : {2, 8}) {
            const ModulusScan parallel = modulus_scan(g, idx, threads);
            CHECK(serial.r_hat == parallel.r_hat);
            CHECK(serial.attaining == parallel.attaining);
            CHECK(serial.pairs_used == parallel.pairs_used);
            CHECK(serial.pairs_skipped == parallel.pairs_skipped);
        }
    }
}

// ---------------------------------------------------------------------------
// maximality probes

TEST_CASE("the closure point of the open-interval graph is addable") {
    const SampledGraph g = sample1("remark-6.4-1", -1, 1, 0.1);
    REQUIRE(g.size() == 19);  // the endpoints are outside the domain
    const std::vector<GraphPoint> probes{
        {{1.0}, {0.0}}, {{-1.0}, {0.0}}, {{0.5}, {0.5}}};
    const ProbeResult result = maximality_probe(g, probes);
    REQUIRE(result.addable == std::vector<std::size_t>{0, 1});
    CHECK(result.candidates[0].min_margin >= 0.0);
    // (0.5, 0.5) breaks monotonicity against the zero branch to its right.
    CHECK_FALSE(result.candidates[2].addable);
}

TEST_CASE("empty probe set gives an empty result") {
    const ProbeResult result =
        maximality_probe(remark46_graph(), std::vector<GraphPoint>{});
    CHECK(result.candidates.empty());
    CHECK(result.addable.empty());
}

TEST_CASE("a vertical enlargement of the identity is rejected") {
    const SampledGraph g = sample1("identity", -1, 1, 0.05);
    const std::vector<GraphPoint> probes{{{0.0}, {1.0}}};
    const ProbeResult result = maximality_probe(g, probes);
    CHECK(result.addable.empty());
    CHECK(result.candidates[0].min_margin < 0.0);
}

TEST_CASE("existing graph points are filtered from the addable list") {
    const SampledGraph g = sample1("identity", -1, 1, 0.5);
    const std::vector<GraphPoint> probes{{{0.5}, {0.5}}, {{2.0}, {2.0}}};
    const ProbeResult result = maximality_probe(g, probes);
    CHECK(result.candidates[0].already_present);
    CHECK_FALSE(result.candidates[0].addable);
    CHECK(result.addable == std::vector<std::size_t>{1});
}

TEST_CASE("appending any addable point preserves the global verdict") {
    oracle::Rng rng(13);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::monotone_pwl;
        spec.seed = seed;
        spec.params = {{"points", 15.0}};
        const SampledGraph g = generate_random(spec).graph;
        std::vector<GraphPoint> probes;
        for (int k = 0; k < 12; ++k)
            probes.push_back({{rng.uniform(-2, 2)}, {rng.uniform(-4, 4)}});
        const ProbeResult result = maximality_probe(g, probes);
        for (std::size_t pi : result.addable) {
            const SampledGraph enlarged = g.with_appended(probes[pi]);
            REQUIRE(check_global_monotone(enlarged).status == Status::holds);
        }
    }
}

TEST_CASE("local probe restricts both the graph and the candidates") {
    const SampledGraph g = sample1("remark-6.4-1", -1, 1, 0.1);
    // Window around the right end of the sampled open interval.
    const NeighborhoodSpec window{{{0.99}, {0.0}}, 0.5};
    const std::vector<GraphPoint> probes{{{1.0}, {0.0}}, {{-1.0}, {0.0}}};
    const ProbeResult result = local_maximality_probe(g, window, probes);
    REQUIRE(result.addable == std::vector<std::size_t>{0});
    CHECK(result.window_size.value() > 0);

    // Window disjoint from every probe point: nothing to report.
    const NeighborhoodSpec far{{{-0.5}, {0.0}}, 0.05};
    CHECK(local_maximality_probe(g, far, probes).candidates.empty());
}

TEST_CASE("staircase vertical segment: matching probes are already present") {
    SamplingSpec spec;
    spec.window = {{-1.0, 1.0, 0.25}};
    const SampledGraph g =
        sample_operator(catalog_operator("abs-subdifferential",
                                         {{"resolution", 9.0}}),
                        spec)
            .graph;
    std::vector<GraphPoint> probes;
    for (double y : {-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0})
        probes.push_back({{0.0}, {y}});
    const NeighborhoodSpec window{{{0.0}, {0.0}}, 1.1};
    const ProbeResult result = local_maximality_probe(g, window, probes);
    CHECK(result.addable.empty());
    for (const ProbeCandidate& c : result.candidates) {
        CHECK(c.already_present);
        CHECK(c.min_margin >= 0.0);  // the segment itself is sign-correct
    }
}

// ---------------------------------------------------------------------------
// segment_scan

TEST_CASE("segment scan refutes the discontinuous step") {
    const CheckReport report = segment_scan(
        catalog_operator("example-3.3-2"), {-1.0}, {1.0}, 100);
    CHECK(report.status == Status::refuted);
    REQUIRE(report.lambda.has_value());
    CHECK(*report.lambda == 0.0);  // the start point already fails vs T(q)
    CHECK(*report.margin < 0.0);
}

TEST_CASE("segment scan holds on the identity") {
    const CheckReport report =
        segment_scan(catalog_operator("identity"), {-1.0}, {1.0}, 50);
    CHECK(report.status == Status::holds);
    CHECK(*report.min_margin >= 0.0);
}

TEST_CASE("segment scan requires single-valuedness on the segment") {
    CHECK_THROWS_AS(segment_scan(catalog_operator("example-3.3-1"), {-1.0},
                                 {1.0}, 100),
                    ContractError);
    CHECK_THROWS_AS(segment_scan(catalog_operator("abs-subdifferential"),
                                 {-1.0}, {1.0}, 100),
                    ContractError);
    CHECK_THROWS_AS(
        segment_scan(catalog_operator("identity"), {-1.0}, {1.0}, 0),
        ContractError);
    CHECK_THROWS_AS(
        segment_scan(catalog_operator("identity"), {-1.0, 0.0}, {1.0}, 10),
        ContractError);
}

TEST_CASE("segment scan catches interior pairwise failures") {
    // The square is monotone against the endpoints of [-1, 2] but pairs in
    // the negative region fail: (x1^2 - x2^2)(x1 - x2) < 0 when x1 + x2 < 0.
    OperatorSpec square;
    square.name = "square";
    square.domain_dim = 1;
    square.eval = [](const Vector& x) {
        return std::vector<Vector>{{x[0] * x[0]}};
    };
    const CheckReport report = segment_scan(square, {-1.0}, {2.0}, 60);
    REQUIRE(report.status == Status::refuted);
    CHECK_FALSE(report.lambda.has_value());  // the endpoint net scan passes
    REQUIRE(report.witness.has_value());
    CHECK(*report.margin < 0.0);
    CHECK(report.detail.find("pairwise") != std::string::npos);
}

TEST_CASE("segment scan in two dimensions stays on monotone rays") {
    // remark-3.2 restricted to the upper half plane is (x, 0), monotone
    // along horizontal segments there.
    const CheckReport report = segment_scan(
        catalog_operator("remark-3.2"), {-1.0, 1.0}, {1.0, 1.0}, 64);
    CHECK(report.status == Status::holds);
}
