#include "mono/catalog.hpp"

#include <algorithm>
#include <cmath>

namespace mono {

std::vector<Vector> OperatorSpec::operator()(const Vector& x) const {
    if (x.size() != domain_dim)
        throw ContractError("operator '" + name + "': input has dimension " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(domain_dim));
    if (!all_finite(x))
        throw ContractError("operator '" + name + "': non-finite input");
    std::vector<Vector> values = eval(x);
    for (const Vector& v : values)
        if (v.size() != domain_dim || !all_finite(v))
            throw ContractError("operator '" + name +
                                "': eval produced an invalid value");
    return values;
}

namespace {

// a, ..., b with exact endpoints; k == 1 yields the midpoint.
std::vector<double> linspace(double a, double b, std::size_t k) {
    if (k == 0) throw ContractError("linspace: need at least one sample");
    if (k == 1) return {(a + b) / 2.0};
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) /
                         static_cast<double>(k - 1);
    out.front() = a;
    out.back() = b;
    return out;
}

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::size_t get_count_param(const std::map<std::string, double>& params,
                            const std::string& key, std::size_t fallback) {
    const double v = get_param(params, key, static_cast<double>(fallback));
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
        throw ContractError("parameter '" + key +
                            "' must be a positive integer");
    return static_cast<std::size_t>(v);
}

void reject_unknown_params(const std::string& name,
                           const std::map<std::string, double>& params,
                           std::initializer_list<const char*> known) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return key == k;
            }) == known.end())
            throw ContractError("catalog entry '" + name +
                                "' does not take parameter '" + key + "'");
    }
}

struct Entry {
    const char* description;
    OperatorSpec (*make)(const std::map<std::string, double>&);
    double declared_radius = 0.0;  // 0 = none declared
};

OperatorSpec make_identity(const std::map<std::string, double>& params) {
    reject_unknown_params("identity", params, {"dim"});
    const std::size_t dim = get_count_param(params, "dim", 1);
    if (dim > 16) throw ContractError("identity: dim too large");
    return {"identity", params, dim,
            [](const Vector& x) { return std::vector<Vector>{x}; }};
}

OperatorSpec make_linear(const std::map<std::string, double>& params) {
    reject_unknown_params("linear", params, {"slope", "intercept"});
    const double slope = get_param(params, "slope", 1.0);
    const double intercept = get_param(params, "intercept", 0.0);
    return {"linear", params, 1, [slope, intercept](const Vector& x) {
                return std::vector<Vector>{{slope * x[0] + intercept}};
            }};
}

OperatorSpec make_abs_subdifferential(
    const std::map<std::string, double>& params) {
    reject_unknown_params("abs-subdifferential", params, {"resolution"});
    const std::size_t res = get_count_param(params, "resolution", 9);
    return {"abs-subdifferential", params, 1, [res](const Vector& x) {
                std::vector<Vector> out;
                if (x[0] < 0.0) {
                    out.push_back({-1.0});
                } else if (x[0] > 0.0) {
                    out.push_back({1.0});
                } else {
                    for (double v : linspace(-1.0, 1.0, res))
                        out.push_back({v});
                }
                return out;
            }};
}

OperatorSpec make_example_5_1(const std::map<std::string, double>& params) {
    reject_unknown_params("example-5.1", params, {});
    return {"example-5.1", params, 2, [](const Vector& p) {
                const double x = p[0], y = p[1];
                if (x >= 0.0 && y == 0.0)
                    return std::vector<Vector>{{0.0, std::max(3.0 * x - 1.0, 0.0)}};
                if (x == 0.0 && y >= 0.0) return std::vector<Vector>{{-y, 0.0}};
                return std::vector<Vector>{};
            }};
}

OperatorSpec make_example_3_3_1(const std::map<std::string, double>& params) {
    reject_unknown_params("example-3.3-1", params, {});
    return {"example-3.3-1", params, 1, [](const Vector& p) {
                if (p[0] < 0.0) return std::vector<Vector>{{0.0}};
                if (p[0] > 0.0) return std::vector<Vector>{{-1.0}};
                return std::vector<Vector>{};  // 0 is not in the domain
            }};
}

std::vector<Vector> step_down_eval(const Vector& p) {
    if (p[0] <= 0.0) return {{0.0}};
    return {{-1.0}};
}

OperatorSpec make_example_3_3_2(const std::map<std::string, double>& params) {
    reject_unknown_params("example-3.3-2", params, {});
    return {"example-3.3-2", params, 1, &step_down_eval};
}

OperatorSpec make_remark_4_6(const std::map<std::string, double>& params) {
    reject_unknown_params("remark-4.6", params, {});
    return {"remark-4.6", params, 1, &step_down_eval};
}

OperatorSpec make_remark_3_2(const std::map<std::string, double>& params) {
    reject_unknown_params("remark-3.2", params, {});
    return {"remark-3.2", params, 2, [](const Vector& p) {
                const double x = p[0], y = p[1];
                if (x < 0.0) return std::vector<Vector>{{0.0, 0.0}};
                if (y >= 0.0) return std::vector<Vector>{{x, 0.0}};
                return std::vector<Vector>{{-x, 0.0}};
            }};
}

OperatorSpec make_remark_6_4_1(const std::map<std::string, double>& params) {
    reject_unknown_params("remark-6.4-1", params, {});
    return {"remark-6.4-1", params, 1, [](const Vector& p) {
                if (p[0] > -1.0 && p[0] < 1.0) return std::vector<Vector>{{0.0}};
                return std::vector<Vector>{};
            }};
}

OperatorSpec make_remark_6_4_2(const std::map<std::string, double>& params) {
    reject_unknown_params("remark-6.4-2-truncated", params,
                          {"M", "resolution"});
    const double M = get_param(params, "M", 1.0);
    if (!(M > 0.0) || !std::isfinite(M))
        throw ContractError("remark-6.4-2-truncated: M must be positive");
    const std::size_t res = get_count_param(params, "resolution", 9);
    return {"remark-6.4-2-truncated", params, 1, [M, res](const Vector& p) {
                std::vector<Vector> out;
                if (p[0] == 0.0 || p[0] == 1.0)
                    for (double v : linspace(-M, M, res)) out.push_back({v});
                return out;
            }};
}

const std::map<std::string, Entry>& registry() {
    static const std::map<std::string, Entry> entries = {
        {"identity", {"identity operator on R^n (param: dim)", &make_identity}},
        {"linear",
         {"affine scalar operator y = slope*x + intercept "
          "(params: slope, intercept)",
          &make_linear}},
        {"abs-subdifferential",
         {"subdifferential of |x|: sign(x) away from 0, the segment [-1,1] "
          "at 0 (param: resolution)",
          &make_abs_subdifferential}},
        {"example-5.1",
         {"planar set-valued operator supported on two coordinate half-axes: "
          "(0, max(3x-1,0)) on the x>=0 axis, (-y, 0) on the y>=0 axis; "
          "locally monotone around every graph point, not globally monotone",
          &make_example_5_1, 0.25}},
        {"example-3.3-1",
         {"step from {0} (x<0) to {-1} (x>0) with 0 removed from the domain",
          &make_example_3_3_1, 0.4}},
        {"example-3.3-2",
         {"step from 0 (x<=0) down to -1 (x>0); discontinuous at 0",
          &make_example_3_3_2, 0.4}},
        {"remark-3.2",
         {"planar single-valued map, discontinuous across y=0 for x>0; its "
          "graph is not path-connected",
          &make_remark_3_2}},
        {"remark-4.6",
         {"step from 0 (x<=0) down to -1 (x>0) on a convex domain; locally "
          "monotone everywhere, not globally monotone",
          &make_remark_4_6, 0.4}},
        {"remark-6.4-1",
         {"zero operator on the open interval (-1,1); monotone, graph not "
          "closed",
          &make_remark_6_4_1}},
        {"remark-6.4-2-truncated",
         {"vertical value segments [-M,M] at x=0 and x=1, discretized "
          "(params: M, resolution)",
          &make_remark_6_4_2, 0.4}},
    };
    return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : registry()) {
        (void)entry;
        names.push_back(name);
    }
    return names;
}

std::string catalog_description(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw LookupError("unknown catalog entry '" + name + "'");
    return it->second.description;
}

std::optional<double> catalog_declared_radius(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw LookupError("unknown catalog entry '" + name + "'");
    if (it->second.declared_radius > 0.0) return it->second.declared_radius;
    return std::nullopt;
}

OperatorSpec catalog_operator(const std::string& name,
                              const std::map<std::string, double>& params) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw LookupError("unknown catalog entry '" + name + "'");
    return it->second.make(params);
}

std::vector<Vector> catalog_eval(const std::string& name,
                                 const std::map<std::string, double>& params,
                                 const Vector& x) {
    return catalog_operator(name, params)(x);
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<double> AxisRange::values() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
        throw ContractError("AxisRange: non-finite bounds");
    if (lo > hi) throw ContractError("AxisRange: lo > hi");
    if (!(step > 0.0)) throw ContractError("AxisRange: step must be positive");
    const double estimate = (hi - lo) / step;
    if (estimate > 1e7) throw ContractError("AxisRange: grid too large");
    std::vector<double> out;
    const double slack = hi + step * 1e-9;
    for (std::size_t k = 0;; ++k) {
        const double v = lo + static_cast<double>(k) * step;
        if (v > slack) break;
        out.push_back(v);
    }
    return out;
}

AxisRange AxisRange::from_resolution(double lo, double hi,
                                     std::size_t points) {
    if (points == 0) throw ContractError("AxisRange: need at least one point");
    if (points == 1 || lo == hi) {
        const double mid = points == 1 ? (lo + hi) / 2.0 : lo;
        return {mid, mid, 1.0};
    }
    return {lo, hi, (hi - lo) / static_cast<double>(points - 1)};
}

namespace {

std::vector<Vector> grid_nodes(const std::vector<AxisRange>& window,
                               std::size_t dim) {
    if (window.size() != dim)
        throw ContractError("sample_operator: window has " +
                            std::to_string(window.size()) + " axes, operator " +
                            "has dimension " + std::to_string(dim));
    std::vector<std::vector<double>> axes;
    axes.reserve(dim);
    std::size_t total = 1;
    for (const AxisRange& a : window) {
        axes.push_back(a.values());
        total *= axes.back().size();
        if (total > 1e7) throw ContractError("sample_operator: grid too large");
    }
    std::vector<Vector> nodes;
    nodes.reserve(total);
    std::vector<std::size_t> odo(dim, 0);
    for (std::size_t c = 0; c < total; ++c) {
        Vector node(dim);
        for (std::size_t d = 0; d < dim; ++d) node[d] = axes[d][odo[d]];
        nodes.push_back(std::move(node));
        for (std::size_t d = dim; d-- > 0;) {  // axis 0 is the slowest
            if (++odo[d] < axes[d].size()) break;
            odo[d] = 0;
        }
    }
    return nodes;
}

}  // namespace

SampleResult sample_operator(const OperatorSpec& op, const SamplingSpec& spec) {
    std::vector<Vector> nodes;
    switch (spec.scheme) {
        case SamplingSpec::Scheme::grid:
            nodes = grid_nodes(spec.window, op.domain_dim);
            break;
        case SamplingSpec::Scheme::path_trace:
            if (op.domain_dim != 1)
                throw ContractError(
                    "sample_operator: path-trace needs a dim-1 operator");
            nodes = grid_nodes(spec.window, 1);
            break;
        case SamplingSpec::Scheme::list:
            nodes = spec.points;
            break;
    }

    std::vector<GraphPoint> points;
    std::size_t hits = 0;
    for (const Vector& x : nodes) {
        std::vector<Vector> values = op(x);
        if (values.empty()) continue;
        ++hits;
        if (spec.scheme == SamplingSpec::Scheme::path_trace)
            std::sort(values.begin(), values.end());
        for (Vector& v : values) {
            GraphPoint p{x, std::move(v)};
            if (spec.scheme == SamplingSpec::Scheme::path_trace &&
                !points.empty() && points.back() == p)
                continue;  // keep the trace injective
            points.push_back(std::move(p));
        }
    }
    return {SampledGraph(op.domain_dim, std::move(points), op.name),
            nodes.size(), hits};
}

}  // namespace mono
