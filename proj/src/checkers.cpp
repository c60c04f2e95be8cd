#include "mono/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "mono/geometry.hpp"

namespace mono {

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::refuted: return "refuted";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

CheckReport report_from_scan(const MonotoneScan& scan, double tol) {
    CheckReport report;
    report.tolerance = tol;
    report.pairs_checked = scan.pairs;
    report.min_margin = scan.min_margin;
    if (scan.violation) {
        report.status = Status::refuted;
        report.witness = scan.violation;
        report.margin = scan.violation_margin;
    } else {
        report.status = Status::holds;
        report.margin = scan.min_margin;
    }
    return report;
}

void require_tolerance(double tol) {
    if (!(tol >= 0.0)) throw ContractError("tolerance must be nonnegative");
}

}  // namespace

CheckReport check_global_monotone(const SampledGraph& graph, double tol,
                                  int threads) {
    require_tolerance(tol);
    if (graph.empty()) {
        CheckReport report;
        report.tolerance = tol;
        report.detail = "empty graph";
        return report;  // inconclusive
    }
    const std::vector<std::size_t> idx = all_indices(graph.size());
    return report_from_scan(monotone_scan(graph, idx, tol, threads), tol);
}

CheckReport check_local_monotone(const SampledGraph& graph,
                                 const NeighborhoodSpec& spec, double tol,
                                 int threads) {
    require_tolerance(tol);
    const std::vector<std::size_t> idx = range_query(graph, spec);
    if (idx.empty()) {
        CheckReport report;
        report.tolerance = tol;
        report.subset_size = 0;
        report.detail = "empty restriction";
        return report;  // inconclusive
    }
    CheckReport report = report_from_scan(monotone_scan(graph, idx, tol, threads), tol);
    report.subset_size = idx.size();
    return report;
}

double local_radius(const SampledGraph& graph, std::size_t center_index,
                    double tol, int threads) {
    require_tolerance(tol);
    const GraphPoint& center = graph.point(center_index);
    const std::size_t n = graph.size();

    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i)
        dist[i] = product_distance(center, graph.points()[i]);

    // A pair enters the restriction once the radius reaches the farther of
    // its two distances, and a violation never leaves as the radius grows.
    // So the check holds at rho exactly when rho < the smallest such entry
    // radius over violating pairs.
    double entry = std::numeric_limits<double>::infinity();
#ifdef MONO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) \
    reduction(min : entry)
#endif
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
        const std::size_t i = static_cast<std::size_t>(a);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (monotonicity_margin(graph.points()[i], graph.points()[j]) <
                -tol)
                entry = std::min(entry, std::max(dist[i], dist[j]));
        }
    }
    (void)threads;
    if (std::isinf(entry)) return entry;  // whole graph monotone

    double best = 0.0;
    for (double d : dist)
        if (d < entry) best = std::max(best, d);
    return best;
}

ModulusEstimate hypomonotonicity_modulus(const SampledGraph& graph, double tol,
                                         int threads) {
    require_tolerance(tol);
    if (graph.empty())
        throw ContractError("hypomonotonicity_modulus: empty graph");
    const std::vector<std::size_t> idx = all_indices(graph.size());
    const ModulusScan scan = modulus_scan(graph, idx, threads);
    ModulusEstimate est;
    est.r_hat = scan.r_hat;
    est.pairs_used = scan.pairs_used;
    est.pairs_skipped = scan.pairs_skipped;
    est.all_pairs_skipped = scan.pairs_used == 0 && scan.pairs_skipped > 0;
    if (scan.r_hat > tol) est.attaining_pair = scan.attaining;
    return est;
}

namespace {

ProbeResult probe_impl(const SampledGraph& graph,
                       std::span<const std::size_t> graph_idx,
                       std::span<const GraphPoint> probes,
                       std::span<const std::size_t> probe_idx, double tol,
                       int threads) {
    ProbeResult result;
    result.tolerance = tol;
    result.candidates.resize(probe_idx.size());

#ifdef MONO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(probe_idx.size());
         ++c) {
        const std::size_t pi = probe_idx[static_cast<std::size_t>(c)];
        const GraphPoint& cand = probes[pi];
        ProbeCandidate out;
        out.probe_index = pi;
        double worst = std::numeric_limits<double>::infinity();
        bool present = false;
        for (std::size_t g : graph_idx) {
            const GraphPoint& gp = graph.points()[g];
            worst = std::min(worst, monotonicity_margin(cand, gp));
            if (product_distance(cand, gp) <= tol) present = true;
        }
        out.min_margin = std::isinf(worst) ? 0.0 : worst;
        out.already_present = present;
        out.addable = !present && worst >= -tol;
        result.candidates[static_cast<std::size_t>(c)] = out;
    }
    (void)threads;
    for (const ProbeCandidate& c : result.candidates)
        if (c.addable) result.addable.push_back(c.probe_index);
    return result;
}

}  // namespace

namespace {

void validate_probes(const SampledGraph& graph,
                     std::span<const GraphPoint> probes) {
    for (const GraphPoint& p : probes)
        if (p.x.size() != graph.dim() || p.y.size() != graph.dim() ||
            !all_finite(p.x) || !all_finite(p.y))
            throw ContractError("maximality_probe: invalid probe point");
}

}  // namespace

ProbeResult maximality_probe(const SampledGraph& graph,
                             std::span<const GraphPoint> probes, double tol,
                             int threads) {
    require_tolerance(tol);
    validate_probes(graph, probes);
    const std::vector<std::size_t> gidx = all_indices(graph.size());
    const std::vector<std::size_t> pidx = all_indices(probes.size());
    return probe_impl(graph, gidx, probes, pidx, tol, threads);
}

ProbeResult local_maximality_probe(const SampledGraph& graph,
                                   const NeighborhoodSpec& spec,
                                   std::span<const GraphPoint> probes,
                                   double tol, int threads) {
    require_tolerance(tol);
    validate_probes(graph, probes);
    const std::vector<std::size_t> gidx = range_query(graph, spec);
    std::vector<std::size_t> pidx;
    const double r2 = spec.radius * spec.radius;
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (product_distance2(probes[i], spec.center) <= r2) pidx.push_back(i);
    ProbeResult result = probe_impl(graph, gidx, probes, pidx, tol, threads);
    result.window_size = gidx.size();
    return result;
}

CheckReport segment_scan(const OperatorSpec& op, const Vector& p,
                         const Vector& q, int steps, double tol) {
    require_tolerance(tol);
    if (steps < 1) throw ContractError("segment_scan: steps must be >= 1");
    if (p.size() != op.domain_dim || q.size() != op.domain_dim)
        throw ContractError("segment_scan: endpoint dimension mismatch");

    const std::size_t n = op.domain_dim;
    std::vector<GraphPoint> net;
    net.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double lambda =
            static_cast<double>(k) / static_cast<double>(steps);
        Vector x(n);
        for (std::size_t d = 0; d < n; ++d)
            x[d] = (1.0 - lambda) * p[d] + lambda * q[d];
        std::vector<Vector> values = op(x);
        if (values.size() != 1)
            throw ContractError(
                "segment_scan: operator is not single-valued on the segment "
                "(lambda = " +
                std::to_string(lambda) + ", " +
                std::to_string(values.size()) + " values)");
        net.push_back({std::move(x), std::move(values.front())});
    }

    CheckReport report;
    report.tolerance = tol;

    // Net-versus-endpoint scan: <T(x_k) - T(q), p - q>.
    const Vector& yq = net.back().y;
    for (int k = 0; k <= steps; ++k) {
        double inner = 0.0;
        for (std::size_t d = 0; d < n; ++d)
            inner += (net[static_cast<std::size_t>(k)].y[d] - yq[d]) *
                     (p[d] - q[d]);
        if (inner < -tol) {
            report.status = Status::refuted;
            report.lambda = static_cast<double>(k) / static_cast<double>(steps);
            report.witness = IndexPair{static_cast<std::size_t>(k),
                                       static_cast<std::size_t>(steps)};
            report.margin = inner;
            report.detail = "endpoint inner product failed on the net";
            return report;
        }
    }

    const SampledGraph net_graph(n, std::move(net));
    const std::vector<std::size_t> idx = all_indices(net_graph.size());
    CheckReport pair_report =
        report_from_scan(monotone_scan_serial(net_graph, idx, tol), tol);
    pair_report.tolerance = tol;
    if (pair_report.status == Status::refuted)
        pair_report.detail = "pairwise margin failed on the net";
    return pair_report;
}

}  // namespace mono
