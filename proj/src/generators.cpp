#include "mono/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mono/catalog.hpp"

namespace mono {

GeneratorSpec::Kind parse_generator_kind(const std::string& name) {
    if (name == "monotone-pwl") return GeneratorSpec::Kind::monotone_pwl;
    if (name == "hypo-shift") return GeneratorSpec::Kind::hypo_shift;
    if (name == "local-not-global")
        return GeneratorSpec::Kind::local_not_global;
    if (name == "step") return GeneratorSpec::Kind::step;
    throw LookupError("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorSpec::Kind kind) {
    switch (kind) {
        case GeneratorSpec::Kind::monotone_pwl: return "monotone-pwl";
        case GeneratorSpec::Kind::hypo_shift: return "hypo-shift";
        case GeneratorSpec::Kind::local_not_global: return "local-not-global";
        case GeneratorSpec::Kind::step: return "step";
    }
    return "?";
}

namespace {

// mt19937_64 output is bit-exact across platforms; the [0,1) mapping below
// avoids std::uniform_real_distribution, whose stream is not portable.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * unit(); }
};

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::size_t get_count(const std::map<std::string, double>& params,
                      const std::string& key, std::size_t fallback) {
    const double v = get_param(params, key, static_cast<double>(fallback));
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
        throw ContractError("generator parameter '" + key +
                            "' must be a positive integer");
    return static_cast<std::size_t>(v);
}

void reject_unknown(const std::string& kind,
                    const std::map<std::string, double>& params,
                    std::initializer_list<const char*> known) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return key == k;
            }) == known.end())
            throw ContractError("generator '" + kind +
                                "' does not take parameter '" + key + "'");
    }
}

// One coordinate of a convex piecewise-linear function: sorted interior
// breakpoints with nondecreasing slopes on either side.
struct ConvexPwl {
    std::vector<double> breakpoints;  // strictly inside the window
    std::vector<double> slopes;       // breakpoints.size() + 1 entries

    double slope_at(double x) const {
        std::size_t piece = 0;
        while (piece < breakpoints.size() && x > breakpoints[piece]) ++piece;
        return slopes[piece];
    }
};

ConvexPwl random_convex_pwl(Rng& rng, std::size_t pieces, double span) {
    ConvexPwl f;
    for (std::size_t i = 0; i + 1 < pieces; ++i)
        f.breakpoints.push_back(rng.uniform(-0.9 * span, 0.9 * span));
    std::sort(f.breakpoints.begin(), f.breakpoints.end());
    double s = rng.uniform(-2.0, 0.5);
    f.slopes.push_back(s);
    for (std::size_t i = 0; i + 1 < pieces; ++i) {
        s += rng.uniform(0.0, 1.5);
        f.slopes.push_back(s);
    }
    return f;
}

std::vector<double> linspace(double a, double b, std::size_t k) {
    std::vector<double> out(k);
    if (k == 1) {
        out[0] = a;
        return out;
    }
    for (std::size_t i = 0; i < k; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) /
                         static_cast<double>(k - 1);
    out.front() = a;
    out.back() = b;
    return out;
}

GeneratedGraph make_monotone_pwl(const GeneratorSpec& spec) {
    reject_unknown("monotone-pwl", spec.params,
                   {"dim", "points", "pieces", "span", "vertical"});
    const std::size_t dim = get_count(spec.params, "dim", 1);
    if (dim > 3) throw ContractError("monotone-pwl: dim must be at most 3");
    const std::size_t points =
        get_count(spec.params, "points", dim == 1 ? 41 : 9);
    const std::size_t pieces = get_count(spec.params, "pieces", 4);
    const double span = get_param(spec.params, "span", 1.0);
    const std::size_t vertical = get_count(spec.params, "vertical", 3);
    if (!(span > 0.0)) throw ContractError("monotone-pwl: span must be > 0");

    Rng rng(spec.seed);
    std::vector<ConvexPwl> f;
    for (std::size_t d = 0; d < dim; ++d)
        f.push_back(random_convex_pwl(rng, pieces, span));

    std::vector<GraphPoint> pts;
    if (dim == 1) {
        // Merge grid abscissas and breakpoints; at a breakpoint emit a small
        // vertical fan spanning the subgradient interval. Walking x upward
        // with ascending fans yields the staircase in path order.
        struct Stop {
            double x;
            bool is_break;
            std::size_t piece;
        };
        std::vector<Stop> stops;
        for (double x : linspace(-span, span, points))
            stops.push_back({x, false, 0});
        for (std::size_t i = 0; i < f[0].breakpoints.size(); ++i)
            stops.push_back({f[0].breakpoints[i], true, i});
        std::stable_sort(stops.begin(), stops.end(),
                         [](const Stop& a, const Stop& b) { return a.x < b.x; });
        for (const Stop& s : stops) {
            if (s.is_break) {
                const double lo = f[0].slopes[s.piece];
                const double hi = f[0].slopes[s.piece + 1];
                for (double y : linspace(lo, hi, vertical)) {
                    GraphPoint p{{s.x}, {y}};
                    if (pts.empty() || !(pts.back() == p))
                        pts.push_back(std::move(p));
                }
            } else {
                GraphPoint p{{s.x}, {f[0].slope_at(s.x)}};
                if (pts.empty() || !(pts.back() == p)) pts.push_back(std::move(p));
            }
        }
    } else {
        std::vector<std::vector<double>> axes(
            dim, linspace(-span, span, points));
        std::vector<std::size_t> odo(dim, 0);
        std::size_t total = 1;
        for (std::size_t d = 0; d < dim; ++d) total *= points;
        for (std::size_t c = 0; c < total; ++c) {
            Vector x(dim), y(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                x[d] = axes[d][odo[d]];
                y[d] = f[d].slope_at(x[d]);
            }
            pts.push_back({std::move(x), std::move(y)});
            for (std::size_t d = dim; d-- > 0;) {
                if (++odo[d] < points) break;
                odo[d] = 0;
            }
        }
    }
    return {SampledGraph(dim, std::move(pts),
                         "monotone-pwl(seed=" + std::to_string(spec.seed) + ")"),
            std::nullopt,
            std::nullopt,
            {}};
}

GeneratedGraph make_hypo_shift(const GeneratorSpec& spec) {
    reject_unknown("hypo-shift", spec.params,
                   {"r", "identity_base", "dim", "points", "pieces", "span",
                    "vertical"});
    const double r = get_param(spec.params, "r", 1.0);
    if (!(r > 0.0)) throw ContractError("hypo-shift: r must be positive");
    const bool identity_base = get_param(spec.params, "identity_base", 0.0) != 0.0;

    std::vector<GraphPoint> pts;
    std::size_t dim = 1;
    if (identity_base) {
        const std::size_t points = get_count(spec.params, "points", 41);
        const double span = get_param(spec.params, "span", 1.0);
        for (double x : linspace(-span, span, points)) pts.push_back({{x}, {x}});
    } else {
        GeneratorSpec base = spec;
        base.kind = GeneratorSpec::Kind::monotone_pwl;
        base.params.erase("r");
        base.params.erase("identity_base");
        GeneratedGraph g = make_monotone_pwl(base);
        dim = g.graph.dim();
        pts = g.graph.points();
    }
    for (GraphPoint& p : pts)
        for (std::size_t d = 0; d < dim; ++d) p.y[d] -= r * p.x[d];
    return {SampledGraph(dim, std::move(pts),
                         "hypo-shift(seed=" + std::to_string(spec.seed) + ")"),
            std::nullopt,
            std::nullopt,
            {{"r", r}}};
}

GeneratedGraph make_local_not_global(const GeneratorSpec& spec) {
    reject_unknown("local-not-global", spec.params, {"a", "b", "points"});
    Rng rng(spec.seed);
    const double a = get_param(spec.params, "a", rng.uniform(0.5, 2.0));
    const double b = get_param(spec.params, "b", rng.uniform(0.5, 2.0));
    if (!(a > 0.0) || !(b > 0.0))
        throw ContractError("local-not-global: scales must be positive");
    const std::size_t points = get_count(spec.params, "points", 11);
    if (points < 4)
        throw ContractError("local-not-global: need at least 4 points per "
                            "branch to straddle the kink");

    // Axis-rescaled copy of the example-5.1 graph. Any two points violating
    // the margin inequality sit at product distance > a/2, so every ball of
    // radius a/4 around a graph point is monotone.
    std::vector<GraphPoint> pts;
    for (double u : linspace(0.0, 1.0, points))
        pts.push_back({{a * u, 0.0}, {0.0, b * std::max(3.0 * u - 1.0, 0.0)}});
    for (double u : linspace(0.0, 1.0, points))
        if (u > 0.0) pts.push_back({{0.0, a * u}, {-b * u, 0.0}});
    return {SampledGraph(2, std::move(pts),
                         "local-not-global(seed=" + std::to_string(spec.seed) +
                             ")"),
            0,
            a / 4.0,
            {{"a", a}, {"b", b}}};
}

GeneratedGraph make_step(const GeneratorSpec& spec) {
    reject_unknown("step", spec.params, {"points", "span", "height", "base"});
    Rng rng(spec.seed);
    const std::size_t points = get_count(spec.params, "points", 21);
    const double span = get_param(spec.params, "span", 1.0);
    const double height = get_param(spec.params, "height", 1.0);
    const double base = get_param(spec.params, "base", 0.0);
    if (!(span > 0.0) || !(height > 0.0))
        throw ContractError("step: span and height must be positive");
    if (points < 2) throw ContractError("step: need at least 2 points");
    const double jump = rng.uniform(-0.5 * span, 0.5 * span);

    std::vector<GraphPoint> pts;
    for (double x : linspace(-span, span, points))
        pts.push_back({{x}, {x <= jump ? base : base - height}});
    return {SampledGraph(1, std::move(pts),
                         "step(seed=" + std::to_string(spec.seed) + ")"),
            std::nullopt,
            std::nullopt,
            {{"jump", jump}}};
}

}  // namespace

GeneratedGraph generate_random(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::monotone_pwl: return make_monotone_pwl(spec);
        case GeneratorSpec::Kind::hypo_shift: return make_hypo_shift(spec);
        case GeneratorSpec::Kind::local_not_global:
            return make_local_not_global(spec);
        case GeneratorSpec::Kind::step: return make_step(spec);
    }
    throw LookupError("unknown generator kind");
}

}  // namespace mono
