#include "mono/varanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "mono/geometry.hpp"

namespace mono {

std::string to_string(PSDReport::Outcome o) {
    switch (o) {
        case PSDReport::Outcome::psd: return "psd";
        case PSDReport::Outcome::violated: return "violated";
        case PSDReport::Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

double halton(std::size_t index, std::size_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
}

}  // namespace

std::vector<Vector> sphere_directions(std::size_t dims, int count) {
    if (count < 4) throw ContractError("sphere_directions: need count >= 4");
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    if (dims == 2) {
        for (int k = 0; k < count; ++k) {
            const double theta = 2.0 * std::numbers::pi *
                                 static_cast<double>(k) /
                                 static_cast<double>(count);
            out.push_back({std::cos(theta), std::sin(theta)});
        }
        return out;
    }
    if (dims == 4) {
        // Uniform S^3 points from a Halton net through the Hopf-style map
        // (sqrt(1-u) e(a), sqrt(u) e(b)); deterministic for fixed count.
        for (int k = 0; k < count; ++k) {
            const std::size_t i = static_cast<std::size_t>(k) + 1;
            const double u = halton(i, 2);
            const double a = 2.0 * std::numbers::pi * halton(i, 3);
            const double b = 2.0 * std::numbers::pi * halton(i, 5);
            const double s = std::sqrt(1.0 - u), t = std::sqrt(u);
            out.push_back({s * std::cos(a), s * std::sin(a), t * std::cos(b),
                           t * std::sin(b)});
        }
        return out;
    }
    throw ContractError(
        "sphere_directions: graph space dimension must be 2 or 4 (operator "
        "dimension 1 or 2)");
}

ConeParams default_cone_params(const SampledGraph& graph) {
    const std::size_t d = 2 * graph.dim();
    ConeParams params;
    params.slack = 1e-6;
    params.directions =
        d == 2 ? 720 : 20 * static_cast<int>(std::lround(std::pow(4.0, d)));
    params.min_neighbors = static_cast<int>(2 * d);

    // rho = 3x the median nearest-neighbor distance in product space.
    const std::size_t n = graph.size();
    std::vector<double> nn(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            best = std::min(best,
                            product_distance(graph.points()[i],
                                             graph.points()[j]));
        }
        nn[i] = std::isinf(best) ? 0.0 : best;
    }
    const double med = median(std::move(nn));
    params.locality_radius = med > 0.0 ? 3.0 * med : 1.0;
    return params;
}

namespace {

ConeParams resolve(const SampledGraph& graph, const ConeParams& given) {
    if (2 * graph.dim() > 4)
        throw ContractError(
            "coderivative checks support operator dimension <= 2");
    ConeParams params = given;
    if (!(params.locality_radius > 0.0) || params.directions <= 0 ||
        params.min_neighbors <= 0) {
        const ConeParams defaults = default_cone_params(graph);
        if (!(params.locality_radius > 0.0))
            params.locality_radius = defaults.locality_radius;
        if (params.directions <= 0) params.directions = defaults.directions;
        if (params.min_neighbors <= 0)
            params.min_neighbors = defaults.min_neighbors;
    }
    if (!(params.slack >= 0.0))
        throw ContractError("ConeParams: slack must be nonnegative");
    if (params.directions < 4)
        throw ContractError("ConeParams: need at least 4 directions");
    return params;
}

// Flattened product-space displacement u - z, x block then y block.
std::vector<double> displacement(const GraphPoint& u, const GraphPoint& z) {
    const std::size_t n = u.x.size();
    std::vector<double> d(2 * n);
    for (std::size_t i = 0; i < n; ++i) d[i] = u.x[i] - z.x[i];
    for (std::size_t i = 0; i < n; ++i) d[n + i] = u.y[i] - z.y[i];
    return d;
}

}  // namespace

DirectionSet regular_normal_directions(const SampledGraph& graph,
                                       std::size_t at_index,
                                       const ConeParams& given) {
    const ConeParams params = resolve(graph, given);
    const GraphPoint& base = graph.point(at_index);
    const std::size_t dims = 2 * graph.dim();

    // Inclusive boundary guard: grid-sampled graphs routinely place neighbors
    // exactly at multiples of the nearest-neighbor distance, and the default
    // radius is such a multiple up to rounding.
    const double rho =
        params.locality_radius + 1e-9 * (1.0 + params.locality_radius);
    std::vector<std::size_t> neighbors =
        range_query(graph, {base, rho});
    std::erase(neighbors, at_index);

    DirectionSet out;
    out.at_index = at_index;
    out.params = params;
    out.neighbor_count = neighbors.size();
    out.vacuous =
        neighbors.size() < static_cast<std::size_t>(params.min_neighbors);

    std::vector<std::vector<double>> disp;
    std::vector<double> norms;
    disp.reserve(neighbors.size());
    for (std::size_t j : neighbors) {
        disp.push_back(displacement(graph.points()[j], base));
        double d2 = 0.0;
        for (double e : disp.back()) d2 += e * e;
        norms.push_back(std::sqrt(d2));
    }

    for (const Vector& v : sphere_directions(dims, params.directions)) {
        bool accepted = true;
        for (std::size_t k = 0; k < disp.size(); ++k) {
            double inner = 0.0;
            for (std::size_t d = 0; d < dims; ++d) inner += v[d] * disp[k][d];
            if (inner > params.slack * norms[k]) {
                accepted = false;
                break;
            }
        }
        if (accepted) out.directions.push_back(v);
    }
    return out;
}

PSDReport coderivative_psd_check(const SampledGraph& graph,
                                 std::size_t at_index,
                                 const ConeParams& params) {
    const DirectionSet cone =
        regular_normal_directions(graph, at_index, params);
    const std::size_t n = graph.dim();

    PSDReport report;
    report.neighbor_count = cone.neighbor_count;
    report.accepted_count = cone.directions.size();
    report.vacuous = cone.vacuous;
    if (cone.vacuous) return report;  // inconclusive: the cone is untrusted

    report.outcome = PSDReport::Outcome::psd;
    for (const Vector& v : cone.directions) {
        // v = (v1, v2) normal to the graph; the adjoint pair is z = v1,
        // w = -v2, and the screen requires <z, w> >= -slack.
        double value = 0.0;
        for (std::size_t d = 0; d < n; ++d) value += v[d] * (-v[n + d]);
        if (value < -cone.params.slack) {
            Vector z(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
            Vector w(n);
            for (std::size_t d = 0; d < n; ++d) w[d] = -v[n + d];
            report.outcome = PSDReport::Outcome::violated;
            report.violating_direction = std::pair{std::move(z), std::move(w)};
            report.value = value;
            return report;  // first failing direction in sampling order
        }
    }
    return report;
}

std::vector<GraphPoint> default_probe_grid(const SampledGraph& graph,
                                           std::size_t per_axis) {
    if (graph.empty() || per_axis < 2) return {};
    const std::size_t n = graph.dim();
    const std::size_t dims = 2 * n;
    std::vector<double> lo(dims), hi(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        double mn = std::numeric_limits<double>::infinity();
        double mx = -mn;
        for (const GraphPoint& p : graph.points()) {
            const double v = d < n ? p.x[d] : p.y[d - n];
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        double pad = 0.25 * (mx - mn);
        if (!(pad > 0.0)) pad = 1.0;
        lo[d] = mn - pad;
        hi[d] = mx + pad;
    }
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) {
        total *= per_axis;
        if (total > 200000)
            throw ContractError("default_probe_grid: grid too large");
    }
    std::vector<GraphPoint> out;
    out.reserve(total);
    std::vector<std::size_t> odo(dims, 0);
    for (std::size_t c = 0; c < total; ++c) {
        GraphPoint p;
        p.x.resize(n);
        p.y.resize(n);
        for (std::size_t d = 0; d < dims; ++d) {
            const double v = lo[d] + (hi[d] - lo[d]) *
                                         static_cast<double>(odo[d]) /
                                         static_cast<double>(per_axis - 1);
            (d < n ? p.x[d] : p.y[d - n]) = v;
        }
        out.push_back(std::move(p));
        for (std::size_t d = dims; d-- > 0;) {
            if (++odo[d] < per_axis) break;
            odo[d] = 0;
        }
    }
    return out;
}

MaxMonoReport check_max_monotone_via_coderivative(
    const SampledGraph& graph, const ConeParams& given, double tol,
    std::span<const GraphPoint> probes, double max_inconclusive_fraction,
    int threads) {
    if (graph.empty())
        throw ContractError("check_max_monotone_via_coderivative: empty graph");
    const ConeParams params = resolve(graph, given);

    MaxMonoReport report;
    report.params = params;
    report.tolerance = tol;
    report.points = graph.size();
    report.max_inconclusive_fraction = max_inconclusive_fraction;
    report.modulus_r_hat =
        hypomonotonicity_modulus(graph, tol, threads).r_hat;

    std::vector<PSDReport> per_point(graph.size());
#ifdef MONO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(graph.size()); ++i)
        per_point[static_cast<std::size_t>(i)] = coderivative_psd_check(
            graph, static_cast<std::size_t>(i), params);
    (void)threads;

    for (std::size_t i = 0; i < per_point.size(); ++i) {
        const PSDReport& r = per_point[i];
        if (r.outcome == PSDReport::Outcome::violated) {
            ++report.violated_count;
            if (!report.first_violated_index) {
                report.first_violated_index = i;
                report.first_violation = r;
            }
        } else if (r.outcome == PSDReport::Outcome::inconclusive) {
            ++report.inconclusive_count;
        }
    }

    if (report.violated_count > 0) {
        report.status = Status::refuted;
    } else {
        const double frac = static_cast<double>(report.inconclusive_count) /
                            static_cast<double>(report.points);
        report.status = frac < max_inconclusive_fraction
                            ? Status::holds
                            : Status::inconclusive;
    }

    std::vector<GraphPoint> grid;
    if (probes.empty()) {
        grid = default_probe_grid(graph);
        probes = grid;
    }
    const ProbeResult probe = maximality_probe(graph, probes, tol, threads);
    report.caveat_open_graph = !probe.addable.empty();
    for (std::size_t pi : probe.addable)
        report.caveat_addable.push_back(probes[pi]);
    return report;
}

}  // namespace mono
