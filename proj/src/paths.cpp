#include "mono/paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mono/geometry.hpp"

namespace mono {

std::string to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::nondecreasing: return "nondecreasing";
        case ComponentClass::nonincreasing: return "nonincreasing";
        case ComponentClass::constant: return "constant";
        case ComponentClass::none: return "none";
    }
    return "?";
}

namespace {
constexpr double kInjectivityTol = 1e-9;
constexpr double kEndpointTol = 1e-12;

double image_dist(const PathKnot& a, const PathKnot& b) {
    const double dx = a.p[0] - b.p[0];
    const double dy = a.p[1] - b.p[1];
    return std::sqrt(dx * dx + dy * dy);
}
}  // namespace

PathSample::PathSample(std::vector<PathKnot> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2)
        throw ContractError("PathSample: need at least two knots");
    for (const PathKnot& k : knots_) {
        if (k.p.size() != 2 || !all_finite(k.p) || !std::isfinite(k.t))
            throw ContractError("PathSample: knot points must be finite R^2");
    }
    if (std::abs(knots_.front().t) > kEndpointTol ||
        std::abs(knots_.back().t - 1.0) > kEndpointTol)
        throw ContractError("PathSample: knot times must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (!(knots_[i + 1].t > knots_[i].t))
            throw ContractError("PathSample: knot times must be strictly "
                                "increasing (knot " +
                                std::to_string(i + 1) + ")");
        t_mesh_ = std::max(t_mesh_, knots_[i + 1].t - knots_[i].t);
        image_mesh_ = std::max(image_mesh_, image_dist(knots_[i + 1], knots_[i]));
    }
    for (std::size_t i = 0; i < knots_.size(); ++i)
        for (std::size_t j = i + 1; j < knots_.size(); ++j)
            if (image_dist(knots_[i], knots_[j]) <= kInjectivityTol)
                throw ContractError("PathSample: knots " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " coincide; the path must be injective");
}

PathSample path_from_graph_order(const SampledGraph& graph) {
    if (graph.dim() != 1)
        throw ContractError("path_from_graph_order: graph must have dim 1");
    if (graph.size() < 2)
        throw ContractError("path_from_graph_order: need at least two points");
    std::vector<PathKnot> knots;
    knots.reserve(graph.size());
    const double last = static_cast<double>(graph.size() - 1);
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const GraphPoint& p = graph.points()[i];
        knots.push_back({static_cast<double>(i) / last, {p.x[0], p.y[0]}});
    }
    knots.back().t = 1.0;
    return PathSample(std::move(knots));
}

namespace {

struct CenterRow {
    bool has_pairs = false;
    double min_product = 0.0;
    bool has_violation = false;
    std::size_t a = 0, b = 0;
    double violation_product = 0.0;
    std::size_t pairs = 0;
};

CenterRow scan_center(const std::vector<PathKnot>& knots, std::size_t c,
                      double radius, double tol) {
    CenterRow row;
    std::vector<std::size_t> inside;
    for (std::size_t k = 0; k < knots.size(); ++k)
        if (image_dist(knots[k], knots[c]) <= radius) inside.push_back(k);
    for (std::size_t ia = 0; ia < inside.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < inside.size(); ++ib) {
            const PathKnot& ka = knots[inside[ia]];
            const PathKnot& kb = knots[inside[ib]];
            const double product =
                (ka.p[0] - kb.p[0]) * (ka.p[1] - kb.p[1]);
            ++row.pairs;
            if (!row.has_pairs || product < row.min_product)
                row.min_product = product;
            row.has_pairs = true;
            if (!row.has_violation && product < -tol) {
                row.has_violation = true;
                row.a = inside[ia];
                row.b = inside[ib];
                row.violation_product = product;
            }
        }
    }
    return row;
}

}  // namespace

CheckReport check_local_monotone_image(const PathSample& path,
                                       double window_radius, double tol,
                                       int threads) {
    if (!(window_radius > 0.0))
        throw ContractError("check_local_monotone_image: window radius must "
                            "be positive");
    if (!(tol >= 0.0)) throw ContractError("tolerance must be nonnegative");
    const std::vector<PathKnot>& knots = path.knots();
    std::vector<CenterRow> rows(knots.size());
#ifdef MONO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(knots.size()); ++c)
        rows[static_cast<std::size_t>(c)] =
            scan_center(knots, static_cast<std::size_t>(c), window_radius, tol);
    (void)threads;

    CheckReport report;
    report.tolerance = tol;
    report.status = Status::holds;
    for (std::size_t c = 0; c < rows.size(); ++c) {
        const CenterRow& row = rows[c];
        report.pairs_checked += row.pairs;
        if (row.has_pairs &&
            (!report.min_margin || row.min_product < *report.min_margin))
            report.min_margin = row.min_product;
        if (row.has_violation && report.status != Status::refuted) {
            report.status = Status::refuted;
            report.center_index = c;
            report.witness = IndexPair{row.a, row.b};
            report.margin = row.violation_product;
        }
    }
    if (report.status == Status::holds) report.margin = report.min_margin;
    return report;
}

namespace {

struct SeqSummary {
    double range_max, range_min;
    double max_drop;  // largest decrease from an earlier value
    double max_rise;  // largest increase from an earlier value
};

SeqSummary summarize(const std::vector<PathKnot>& knots, std::size_t coord) {
    SeqSummary s{knots[0].p[coord], knots[0].p[coord], 0.0, 0.0};
    double prefix_max = knots[0].p[coord];
    double prefix_min = knots[0].p[coord];
    for (std::size_t k = 1; k < knots.size(); ++k) {
        const double v = knots[k].p[coord];
        s.range_max = std::max(s.range_max, v);
        s.range_min = std::min(s.range_min, v);
        s.max_drop = std::max(s.max_drop, prefix_max - v);
        s.max_rise = std::max(s.max_rise, v - prefix_min);
        prefix_max = std::max(prefix_max, v);
        prefix_min = std::min(prefix_min, v);
    }
    return s;
}

ComponentClass classify(const SeqSummary& s, double tol) {
    if (s.range_max - s.range_min <= tol) return ComponentClass::constant;
    if (s.max_drop <= tol) return ComponentClass::nondecreasing;
    if (s.max_rise <= tol) return ComponentClass::nonincreasing;
    return ComponentClass::none;
}

}  // namespace

ComponentClasses component_monotonicity(const PathSample& path, double tol) {
    if (!(tol >= 0.0)) throw ContractError("tolerance must be nonnegative");
    return {classify(summarize(path.knots(), 0), tol),
            classify(summarize(path.knots(), 1), tol)};
}

namespace {

// One coordinate's endpoint checks, on the sign-adjusted sequence
// seq(k) = sign * phi_coord(k) with seq(0) < seq(last).
bool extremality_branch(const std::vector<PathKnot>& knots, std::size_t coord,
                        double sign, double radius, double tol,
                        std::string& why) {
    const std::size_t last = knots.size() - 1;
    const double v0 = sign * knots[0].p[coord];
    const double v1 = sign * knots[last].p[coord];
    for (std::size_t k = 0; k <= last; ++k) {
        const double v = sign * knots[k].p[coord];
        if (v < v0 - tol) {
            why = "coordinate " + std::to_string(coord + 1) +
                  ": interior knot " + std::to_string(k) +
                  " undercuts the start value";
            return false;
        }
        if (v > v1 + tol) {
            why = "coordinate " + std::to_string(coord + 1) +
                  ": interior knot " + std::to_string(k) +
                  " exceeds the end value";
            return false;
        }
    }
    // Orthant inclusions near the endpoints, with the same sign on both
    // coordinates.
    for (std::size_t k = 0; k <= last; ++k) {
        if (image_dist(knots[k], knots[0]) <= radius) {
            for (std::size_t c = 0; c < 2; ++c)
                if (sign * (knots[k].p[c] - knots[0].p[c]) < -tol) {
                    why = "knot " + std::to_string(k) +
                          " leaves the start orthant";
                    return false;
                }
        }
        if (image_dist(knots[k], knots[last]) <= radius) {
            for (std::size_t c = 0; c < 2; ++c)
                if (sign * (knots[k].p[c] - knots[last].p[c]) > tol) {
                    why = "knot " + std::to_string(k) +
                          " leaves the end orthant";
                    return false;
                }
        }
    }
    return true;
}

}  // namespace

CheckReport endpoint_extremality(const PathSample& path, double window_radius,
                                 double tol) {
    CheckReport pre = check_local_monotone_image(path, window_radius, tol);
    if (pre.status == Status::refuted) {
        CheckReport report;
        report.status = Status::inconclusive;
        report.tolerance = tol;
        report.center_index = pre.center_index;
        report.witness = pre.witness;
        report.margin = pre.margin;
        report.detail =
            "local monotonicity of the image fails near the reported window; "
            "endpoint extremality does not apply";
        return report;
    }

    const std::vector<PathKnot>& knots = path.knots();
    const std::size_t last = knots.size() - 1;
    CheckReport report;
    report.status = Status::holds;
    report.tolerance = tol;
    for (std::size_t coord = 0; coord < 2; ++coord) {
        const double v0 = knots[0].p[coord];
        const double v1 = knots[last].p[coord];
        std::string why;
        if (std::abs(v0 - v1) <= tol) {
            const SeqSummary s = summarize(knots, coord);
            if (s.range_max - s.range_min > tol) {
                report.status = Status::refuted;
                report.detail = "coordinate " + std::to_string(coord + 1) +
                                ": equal endpoint values but the coordinate "
                                "is not constant";
                return report;
            }
        } else if (!extremality_branch(knots, coord, v0 < v1 ? 1.0 : -1.0,
                                       window_radius, tol, why)) {
            report.status = Status::refuted;
            report.detail = why;
            return report;
        }
    }
    return report;
}

CheckReport univariate_global_from_local(const SampledGraph& graph,
                                         const PathSample& trace, double tol,
                                         std::optional<double> window_radius,
                                         int threads) {
    if (graph.dim() != 1)
        throw ContractError(
            "univariate_global_from_local: graph must have dim 1");
    const double membership_tol = std::max(tol, 1e-12);
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const PathKnot& knot = trace.knots()[k];
        const GraphPoint as_point{{knot.p[0]}, {knot.p[1]}};
        bool on_graph = false;
        for (const GraphPoint& g : graph.points())
            if (product_distance(as_point, g) <= membership_tol) {
                on_graph = true;
                break;
            }
        if (!on_graph)
            throw ContractError("univariate_global_from_local: trace knot " +
                                std::to_string(k) +
                                " does not lie on the graph");
    }

    const double radius = window_radius.value_or(3.0 * trace.image_mesh());
    CheckReport local = check_local_monotone_image(trace, radius, tol, threads);
    if (local.status == Status::refuted) {
        CheckReport report;
        report.status = Status::inconclusive;
        report.tolerance = tol;
        report.center_index = local.center_index;
        report.witness = local.witness;
        report.margin = local.margin;
        report.detail = "trace image is not locally monotone at the window "
                        "radius; no global conclusion";
        return report;
    }

    CheckReport global = check_global_monotone(graph, tol, threads);
    if (global.status == Status::holds) {
        global.detail = "local image check and global check agree";
        return global;
    }
    global.theorem_violation = true;
    global.detail =
        "THEOREM-VIOLATION: trace is locally monotone at the window radius "
        "but the graph fails the global check; suspect a bug or an "
        "inadequate window/mesh";
    return global;
}

// ---------------------------------------------------------------------------
// Path JSON

std::string path_to_json_string(const PathSample& path) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json knots = nlohmann::ordered_json::array();
    for (const PathKnot& k : path.knots()) {
        nlohmann::ordered_json jk;
        jk["t"] = k.t;
        jk["p"] = k.p;
        knots.push_back(std::move(jk));
    }
    doc["knots"] = std::move(knots);
    return doc.dump(2) + "\n";
}

PathSample path_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("path JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
        throw ParseError("path JSON: expected object with a 'knots' array");
    std::vector<PathKnot> knots;
    std::size_t i = 0;
    for (const auto& jk : doc["knots"]) {
        if (!jk.is_object() || !jk.contains("t") || !jk.contains("p") ||
            !jk["t"].is_number() || !jk["p"].is_array() || jk["p"].size() != 2)
            throw ParseError("path JSON: knot " + std::to_string(i) +
                             " must be {\"t\": number, \"p\": [a, b]}");
        PathKnot k;
        k.t = jk["t"].get<double>();
        for (const auto& e : jk["p"]) {
            if (!e.is_number())
                throw ParseError("path JSON: knot " + std::to_string(i) +
                                 " has a non-numeric point entry");
            k.p.push_back(e.get<double>());
        }
        knots.push_back(std::move(k));
        ++i;
    }
    try {
        return PathSample(std::move(knots));
    } catch (const ContractError& e) {
        throw ParseError(std::string("path JSON: ") + e.what());
    }
}

PathSample load_path(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return path_from_json_string(buf.str());
}

void save_path(const PathSample& path, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + file.string() + "' for writing");
    out << path_to_json_string(path);
}

}  // namespace mono
