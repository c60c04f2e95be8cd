#include "mono/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mono/catalog.hpp"
#include "mono/checkers.hpp"
#include "mono/generators.hpp"
#include "mono/geometry.hpp"
#include "mono/graph_io.hpp"
#include "mono/paths.hpp"
#include "mono/reports_json.hpp"
#include "mono/varanalysis.hpp"

namespace mono::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_code(Status s) {
    switch (s) {
        case Status::holds: return 0;
        case Status::refuted: return 1;
        case Status::inconclusive: return 2;
    }
    return 64;
}

double parse_real(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ContractError("cannot parse " + what + " '" + text + "'");
    return v;
}

Vector parse_vector(const std::string& text) {
    Vector v;
    std::string field;
    std::istringstream in(text);
    while (std::getline(in, field, ','))
        v.push_back(parse_real(field, "coordinate"));
    if (v.empty()) throw ContractError("empty vector literal");
    return v;
}

std::map<std::string, double> parse_params(
    const std::vector<std::string>& kvs) {
    std::map<std::string, double> params;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ContractError("--param expects k=v, got '" + kv + "'");
        params[kv.substr(0, eq)] =
            parse_real(kv.substr(eq + 1), "parameter value");
    }
    return params;
}

// Grid syntax: comma-separated axes, each "lo:hi:step" or a single value.
// A single axis is broadcast across all expected axes.
std::vector<AxisRange> parse_grid(const std::string& text,
                                  std::size_t expected_axes) {
    std::vector<AxisRange> axes;
    std::string axis;
    std::istringstream in(text);
    while (std::getline(in, axis, ',')) {
        std::vector<std::string> parts;
        std::string part;
        std::istringstream ax(axis);
        while (std::getline(ax, part, ':')) parts.push_back(part);
        if (parts.size() == 1) {
            const double v = parse_real(parts[0], "grid value");
            axes.push_back({v, v, 1.0});
        } else if (parts.size() == 3) {
            axes.push_back({parse_real(parts[0], "grid lo"),
                            parse_real(parts[1], "grid hi"),
                            parse_real(parts[2], "grid step")});
        } else {
            throw ContractError("grid axis must be 'lo:hi:step' or a single "
                                "value, got '" + axis + "'");
        }
    }
    if (axes.empty()) throw ContractError("empty grid spec");
    if (axes.size() == 1 && expected_axes > 1)
        axes.assign(expected_axes, axes[0]);
    if (axes.size() != expected_axes)
        throw ContractError("grid spec has " + std::to_string(axes.size()) +
                            " axes, expected " + std::to_string(expected_axes));
    return axes;
}

struct GraphOptions {
    std::string input;
    std::string catalog;
    std::string grid;
    std::vector<std::string> params;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    cmd->add_option("--input", opts.input,
                    "graph file (.json or .csv)");
    cmd->add_option("--catalog", opts.catalog, "catalog operator name");
    cmd->add_option("--grid", opts.grid,
                    "sampling grid 'lo:hi:step[,lo:hi:step...]'");
    cmd->add_option("--param", opts.params, "operator parameter k=v")
        ->take_all();
}

SampledGraph resolve_graph(const GraphOptions& opts) {
    if (!opts.input.empty()) {
        if (!opts.catalog.empty())
            throw ContractError("pass either --input or --catalog, not both");
        return load_graph(opts.input);
    }
    if (opts.catalog.empty())
        throw ContractError("no graph given: pass --input FILE or "
                            "--catalog NAME --grid SPEC");
    if (opts.grid.empty())
        throw ContractError("--catalog needs --grid to sample from");
    const OperatorSpec op =
        catalog_operator(opts.catalog, parse_params(opts.params));
    SamplingSpec sampling;
    sampling.scheme = SamplingSpec::Scheme::grid;
    sampling.window = parse_grid(opts.grid, op.domain_dim);
    return sample_operator(op, sampling).graph;
}

struct ConeOptions {
    double rho = 0.0;
    double slack = 1e-6;
    int directions = 0;
    int min_neighbors = 0;
};

void add_cone_options(CLI::App* cmd, ConeOptions& opts) {
    cmd->add_option("--rho", opts.rho,
                    "cone locality radius (default: 3x median NN distance)");
    cmd->add_option("--slack", opts.slack,
                    "cone directional slack (default 1e-6)");
    cmd->add_option("--directions", opts.directions,
                    "sphere directions m (default: 720 on R^2)");
    cmd->add_option("--min-neighbors", opts.min_neighbors,
                    "neighbors required for a trusted cone (default 2*d)");
}

ConeParams cone_params_from(const ConeOptions& opts) {
    ConeParams params;
    params.locality_radius = opts.rho;
    params.slack = opts.slack;
    params.directions = opts.directions;
    params.min_neighbors = opts.min_neighbors;
    return params;
}

json settings_json(double tol, int threads, std::uint64_t seed) {
    json j;
    j["tolerance"] = tol;
    j["threads"] = threads;
    j["seed"] = seed;
    return j;
}

void emit(std::ostream& out, bool as_json, const std::string& command,
          const json& settings, const json& report,
          const std::string& human) {
    if (as_json) {
        json doc;
        doc["command"] = command;
        doc["settings"] = settings;
        doc["report"] = report;
        out << doc.dump(2) << "\n";
    } else {
        out << human;
    }
}

std::string human_check(const CheckReport& r) {
    std::ostringstream s;
    s << "status: " << to_string(r.status) << "\n";
    if (r.witness)
        s << "witness: (" << r.witness->first << ", " << r.witness->second
          << ")\n";
    if (r.margin) s << "margin: " << format_double(*r.margin) << "\n";
    if (r.min_margin && !(r.margin && *r.margin == *r.min_margin))
        s << "min margin: " << format_double(*r.min_margin) << "\n";
    s << "pairs checked: " << r.pairs_checked << "\n";
    if (r.subset_size) s << "restriction size: " << *r.subset_size << "\n";
    if (r.center_index) s << "center knot: " << *r.center_index << "\n";
    if (r.lambda) s << "lambda: " << format_double(*r.lambda) << "\n";
    if (r.theorem_violation) s << "THEOREM-VIOLATION\n";
    if (!r.detail.empty()) s << "detail: " << r.detail << "\n";
    return s.str();
}

std::vector<GraphPoint> probe_points_from(const std::string& probe_grid,
                                          const std::string& probe_input,
                                          std::size_t dim) {
    if (!probe_grid.empty() && !probe_input.empty())
        throw ContractError("pass either --probe-grid or --probe-input");
    if (!probe_input.empty()) return load_graph(probe_input).points();
    if (probe_grid.empty()) return {};
    const std::vector<AxisRange> axes = parse_grid(probe_grid, 2 * dim);
    std::vector<std::vector<double>> values;
    std::size_t total = 1;
    for (const AxisRange& a : axes) {
        values.push_back(a.values());
        total *= values.back().size();
        if (total > 1000000)
            throw ContractError("probe grid too large");
    }
    std::vector<GraphPoint> out;
    out.reserve(total);
    std::vector<std::size_t> odo(axes.size(), 0);
    for (std::size_t c = 0; c < total; ++c) {
        GraphPoint p;
        p.x.resize(dim);
        p.y.resize(dim);
        for (std::size_t d = 0; d < axes.size(); ++d)
            (d < dim ? p.x[d] : p.y[d - dim]) = values[d][odo[d]];
        out.push_back(std::move(p));
        for (std::size_t d = axes.size(); d-- > 0;) {
            if (++odo[d] < values[d].size()) break;
            odo[d] = 0;
        }
    }
    return out;
}

void write_plot_data(const SampledGraph& graph, std::ostream& out) {
    if (graph.dim() > 2)
        throw ContractError("plot supports graph dimensions 1 and 2 only");
    if (graph.dim() == 1) {
        out << "x,y\n";
        for (const GraphPoint& p : graph.points())
            out << format_double(p.x[0]) << "," << format_double(p.y[0])
                << "\n";
        return;
    }
    constexpr double kZero = 1e-12;
    std::size_t skipped = 0;
    out << "# slice 1: x vs t (points with y = 0 and z = 0)\nx,t\n";
    for (const GraphPoint& p : graph.points())
        if (std::abs(p.x[1]) <= kZero && std::abs(p.y[0]) <= kZero)
            out << format_double(p.x[0]) << "," << format_double(p.y[1])
                << "\n";
    out << "\n# slice 2: y vs z (points with x = 0 and t = 0)\ny,z\n";
    for (const GraphPoint& p : graph.points())
        if (std::abs(p.x[0]) <= kZero && std::abs(p.y[1]) <= kZero)
            out << format_double(p.x[1]) << "," << format_double(p.y[0])
                << "\n";
    for (const GraphPoint& p : graph.points()) {
        const bool slice1 =
            std::abs(p.x[1]) <= kZero && std::abs(p.y[0]) <= kZero;
        const bool slice2 =
            std::abs(p.x[0]) <= kZero && std::abs(p.y[1]) <= kZero;
        if (!slice1 && !slice2) ++skipped;
    }
    if (skipped > 0)
        out << "\n# off-slice points skipped: " << skipped << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"monotonicity toolkit for sampled operator graphs"};
    app.require_subcommand(1);

    double tol = kDefaultTolerance;
    int threads = 1;
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_option("--tol", tol, "margin tolerance (default 1e-9)")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (default 1)")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit a JSON report on stdout");
    app.add_option("--seed", seed, "seed for generator-backed commands")
        ->capture_default_str();

    // global
    auto* global_cmd =
        app.add_subcommand("global", "check global monotonicity");
    GraphOptions global_graph;
    add_graph_options(global_cmd, global_graph);

    // local
    auto* local_cmd = app.add_subcommand(
        "local", "check monotonicity inside a product-space ball");
    GraphOptions local_graph;
    add_graph_options(local_cmd, local_graph);
    std::size_t local_center = 0;
    double local_radius_value = 0.0;
    local_cmd->add_option("--center-index", local_center,
                          "graph point index of the ball center")
        ->required();
    local_cmd->add_option("--radius", local_radius_value, "ball radius")
        ->required();

    // radius
    auto* radius_cmd = app.add_subcommand(
        "radius", "largest locally-monotone radius around a graph point");
    GraphOptions radius_graph;
    add_graph_options(radius_cmd, radius_graph);
    std::size_t radius_center = 0;
    radius_cmd->add_option("--center-index", radius_center,
                           "graph point index of the center")
        ->required();

    // hypo
    auto* hypo_cmd = app.add_subcommand(
        "hypo", "hypomonotonicity modulus estimate over sampled pairs");
    GraphOptions hypo_graph;
    add_graph_options(hypo_cmd, hypo_graph);

    // probe / probe-local
    auto* probe_cmd = app.add_subcommand(
        "probe", "look for graph points addable without breaking monotonicity");
    GraphOptions probe_graph;
    add_graph_options(probe_cmd, probe_graph);
    std::string probe_grid, probe_input;
    probe_cmd->add_option("--probe-grid", probe_grid,
                          "candidate grid over R^{2n} (2n axes)");
    probe_cmd->add_option("--probe-input", probe_input,
                          "graph file whose points are the candidates");

    auto* probe_local_cmd = app.add_subcommand(
        "probe-local", "enlargement probe restricted to a window");
    GraphOptions probe_local_graph;
    add_graph_options(probe_local_cmd, probe_local_graph);
    std::string probe_local_grid, probe_local_input;
    std::size_t probe_local_center = 0;
    double probe_local_radius = 0.0;
    probe_local_cmd->add_option("--probe-grid", probe_local_grid,
                                "candidate grid over R^{2n} (2n axes)");
    probe_local_cmd->add_option("--probe-input", probe_local_input,
                                "graph file whose points are the candidates");
    probe_local_cmd
        ->add_option("--center-index", probe_local_center,
                     "graph point index of the window center")
        ->required();
    probe_local_cmd->add_option("--radius", probe_local_radius, "window radius")
        ->required();

    // segment
    auto* segment_cmd = app.add_subcommand(
        "segment", "scan a single-valued operator along a segment");
    std::string segment_catalog;
    std::vector<std::string> segment_params;
    std::string segment_from, segment_to;
    int segment_steps = 100;
    segment_cmd->add_option("--catalog", segment_catalog, "catalog operator")
        ->required();
    segment_cmd->add_option("--param", segment_params, "operator parameter k=v")
        ->take_all();
    segment_cmd->add_option("--from", segment_from, "segment start, e.g. '1,0'")
        ->required();
    segment_cmd->add_option("--to", segment_to, "segment end")->required();
    segment_cmd->add_option("--steps", segment_steps, "net subdivisions")
        ->capture_default_str();

    // cone
    auto* cone_cmd = app.add_subcommand(
        "cone", "approximate regular normal directions at a graph point");
    GraphOptions cone_graph;
    add_graph_options(cone_cmd, cone_graph);
    std::size_t cone_at = 0;
    ConeOptions cone_opts;
    cone_cmd->add_option("--at", cone_at, "graph point index")->required();
    add_cone_options(cone_cmd, cone_opts);

    // psd
    auto* psd_cmd = app.add_subcommand(
        "psd", "coderivative positive-semidefiniteness at a graph point");
    GraphOptions psd_graph;
    add_graph_options(psd_cmd, psd_graph);
    std::size_t psd_at = 0;
    ConeOptions psd_opts;
    psd_cmd->add_option("--at", psd_at, "graph point index")->required();
    add_cone_options(psd_cmd, psd_opts);

    // maxmono
    auto* maxmono_cmd = app.add_subcommand(
        "maxmono", "combined maximal-monotonicity screen over the graph");
    GraphOptions maxmono_graph;
    add_graph_options(maxmono_cmd, maxmono_graph);
    ConeOptions maxmono_opts;
    add_cone_options(maxmono_cmd, maxmono_opts);
    double maxmono_fraction = 0.25;
    std::string maxmono_probe_grid;
    maxmono_cmd->add_option("--max-inconclusive", maxmono_fraction,
                            "largest tolerated vacuous-point fraction")
        ->capture_default_str();
    maxmono_cmd->add_option("--probe-grid", maxmono_probe_grid,
                            "override the default enlargement probe grid");

    // path-check
    auto* path_cmd = app.add_subcommand(
        "path-check", "analyze a sampled path (and optionally its graph)");
    std::string path_input, path_graph_file;
    double path_window = 0.0;
    path_cmd->add_option("--input", path_input, "path JSON file")->required();
    path_cmd->add_option("--graph", path_graph_file,
                         "dim-1 graph file for the local-to-global harness");
    path_cmd->add_option("--window", path_window,
                         "window radius (default 3x image mesh)");

    // catalog
    auto* catalog_cmd =
        app.add_subcommand("catalog", "list catalog operators or evaluate one");
    std::string catalog_name;
    std::vector<std::string> catalog_params;
    std::string catalog_at;
    catalog_cmd->add_option("--name", catalog_name, "catalog operator name");
    catalog_cmd->add_option("--param", catalog_params, "operator parameter k=v")
        ->take_all();
    catalog_cmd->add_option("--at", catalog_at, "evaluation point, e.g. '1,0'");

    // sample
    auto* sample_cmd = app.add_subcommand(
        "sample", "sample an operator or a random generator into a graph file");
    GraphOptions sample_graph;
    add_graph_options(sample_cmd, sample_graph);
    std::string sample_generate, sample_out, sample_format, sample_scheme =
        "grid";
    sample_cmd->add_option("--generate", sample_generate,
                           "generator kind: monotone-pwl | hypo-shift | "
                           "local-not-global | step");
    sample_cmd->add_option("--scheme", sample_scheme,
                           "sampling scheme: grid | path-trace")
        ->capture_default_str();
    sample_cmd->add_option("--out", sample_out, "output graph file")
        ->required();
    sample_cmd->add_option("--format", sample_format,
                           "output format json | csv (default: by extension)");

    // plot
    auto* plot_cmd =
        app.add_subcommand("plot", "emit plot-ready CSV data for a graph");
    GraphOptions plot_graph;
    add_graph_options(plot_cmd, plot_graph);
    std::string plot_out;
    plot_cmd->add_option("--out", plot_out, "output CSV file")->required();

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> argv = args;
        argv.insert(argv.begin(), "monokit");
        std::vector<const char*> cargs;
        for (const std::string& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 64;
    }

    if (threads < 1) threads = 1;

    try {
        if (*global_cmd) {
            const SampledGraph graph = resolve_graph(global_graph);
            const CheckReport report = check_global_monotone(graph, tol, threads);
            emit(out, as_json, "global", settings_json(tol, threads, seed),
                 to_json(report), human_check(report));
            return exit_code(report.status);
        }

        if (*local_cmd) {
            const SampledGraph graph = resolve_graph(local_graph);
            const NeighborhoodSpec spec{graph.point(local_center),
                                        local_radius_value};
            const CheckReport report =
                check_local_monotone(graph, spec, tol, threads);
            json settings = settings_json(tol, threads, seed);
            settings["center_index"] = local_center;
            settings["radius"] = local_radius_value;
            emit(out, as_json, "local", settings, to_json(report),
                 human_check(report));
            return exit_code(report.status);
        }

        if (*radius_cmd) {
            const SampledGraph graph = resolve_graph(radius_graph);
            const double rho = local_radius(graph, radius_center, tol, threads);
            json settings = settings_json(tol, threads, seed);
            settings["center_index"] = radius_center;
            json report;
            report["unbounded"] = std::isinf(rho);
            if (!std::isinf(rho)) report["radius"] = rho;
            std::ostringstream human;
            if (std::isinf(rho))
                human << "radius: unbounded (graph is globally monotone)\n";
            else
                human << "radius: " << format_double(rho) << "\n";
            emit(out, as_json, "radius", settings, report, human.str());
            return 0;
        }

        if (*hypo_cmd) {
            const SampledGraph graph = resolve_graph(hypo_graph);
            const ModulusEstimate est =
                hypomonotonicity_modulus(graph, tol, threads);
            std::ostringstream human;
            human << "r_hat: " << format_double(est.r_hat)
                  << " (lower bound on sampled graph)\n";
            if (est.attaining_pair)
                human << "attained by pair: (" << est.attaining_pair->first
                      << ", " << est.attaining_pair->second << ")\n";
            if (est.all_pairs_skipped)
                human << "note: all pairs skipped (vertical graph)\n";
            emit(out, as_json, "hypo", settings_json(tol, threads, seed),
                 to_json(est), human.str());
            return 0;
        }

        if (*probe_cmd || *probe_local_cmd) {
            const bool local = static_cast<bool>(*probe_local_cmd);
            const SampledGraph graph =
                resolve_graph(local ? probe_local_graph : probe_graph);
            const std::vector<GraphPoint> probes = probe_points_from(
                local ? probe_local_grid : probe_grid,
                local ? probe_local_input : probe_input, graph.dim());
            if (probes.empty())
                throw ContractError("no probe candidates: pass --probe-grid "
                                    "or --probe-input");
            ProbeResult result;
            json settings = settings_json(tol, threads, seed);
            if (local) {
                const NeighborhoodSpec spec{graph.point(probe_local_center),
                                            probe_local_radius};
                settings["center_index"] = probe_local_center;
                settings["radius"] = probe_local_radius;
                result =
                    local_maximality_probe(graph, spec, probes, tol, threads);
            } else {
                result = maximality_probe(graph, probes, tol, threads);
            }
            std::ostringstream human;
            human << "candidates: " << result.candidates.size()
                  << ", addable: " << result.addable.size() << "\n";
            for (std::size_t pi : result.addable) {
                human << "addable probe " << pi << ": x=(";
                for (std::size_t d = 0; d < graph.dim(); ++d)
                    human << (d ? "," : "") << format_double(probes[pi].x[d]);
                human << ") y=(";
                for (std::size_t d = 0; d < graph.dim(); ++d)
                    human << (d ? "," : "") << format_double(probes[pi].y[d]);
                human << ")\n";
            }
            emit(out, as_json, local ? "probe-local" : "probe", settings,
                 to_json(result, probes), human.str());
            return result.addable.empty() ? 0 : 1;
        }

        if (*segment_cmd) {
            const OperatorSpec op = catalog_operator(
                segment_catalog, parse_params(segment_params));
            const CheckReport report =
                segment_scan(op, parse_vector(segment_from),
                             parse_vector(segment_to), segment_steps, tol);
            json settings = settings_json(tol, threads, seed);
            settings["steps"] = segment_steps;
            emit(out, as_json, "segment", settings, to_json(report),
                 human_check(report));
            return exit_code(report.status);
        }

        if (*cone_cmd) {
            const SampledGraph graph = resolve_graph(cone_graph);
            const DirectionSet dirs = regular_normal_directions(
                graph, cone_at, cone_params_from(cone_opts));
            std::ostringstream human;
            human << "neighbors: " << dirs.neighbor_count
                  << ", accepted directions: " << dirs.directions.size()
                  << (dirs.vacuous ? " (vacuous)" : "") << "\n";
            json settings = settings_json(tol, threads, seed);
            settings["cone"] = cone_params_json(dirs.params);
            emit(out, as_json, "cone", settings, to_json(dirs), human.str());
            return dirs.vacuous ? 2 : 0;
        }

        if (*psd_cmd) {
            const SampledGraph graph = resolve_graph(psd_graph);
            const PSDReport report = coderivative_psd_check(
                graph, psd_at, cone_params_from(psd_opts));
            std::ostringstream human;
            human << "outcome: " << to_string(report.outcome) << "\n";
            if (report.value)
                human << "value: " << format_double(*report.value) << "\n";
            json settings = settings_json(tol, threads, seed);
            settings["at"] = psd_at;
            emit(out, as_json, "psd", settings, to_json(report), human.str());
            switch (report.outcome) {
                case PSDReport::Outcome::psd: return 0;
                case PSDReport::Outcome::violated: return 1;
                case PSDReport::Outcome::inconclusive: return 2;
            }
        }

        if (*maxmono_cmd) {
            const SampledGraph graph = resolve_graph(maxmono_graph);
            const std::vector<GraphPoint> probes = probe_points_from(
                maxmono_probe_grid, "", graph.dim());
            const MaxMonoReport report = check_max_monotone_via_coderivative(
                graph, cone_params_from(maxmono_opts), tol, probes,
                maxmono_fraction, threads);
            std::ostringstream human;
            human << "status: " << to_string(report.status) << "\n"
                  << "modulus r_hat: " << format_double(report.modulus_r_hat)
                  << "\n"
                  << "violated: " << report.violated_count
                  << ", inconclusive: " << report.inconclusive_count << " of "
                  << report.points << "\n";
            if (report.caveat_open_graph)
                human << "caveat: enlargement probe found "
                      << report.caveat_addable.size()
                      << " addable point(s); the sampled graph may be an "
                         "open-graph restriction\n";
            json settings = settings_json(tol, threads, seed);
            settings["cone"] = cone_params_json(report.params);
            emit(out, as_json, "maxmono", settings, to_json(report),
                 human.str());
            return exit_code(report.status);
        }

        if (*path_cmd) {
            const PathSample path = load_path(path_input);
            const double window =
                path_window > 0.0 ? path_window : 3.0 * path.image_mesh();
            const CheckReport image =
                check_local_monotone_image(path, window, tol, threads);
            const ComponentClasses classes = component_monotonicity(path, tol);
            const CheckReport endpoints =
                endpoint_extremality(path, window, tol);
            json report;
            report["local_image"] = to_json(image);
            report["components"] = to_json(classes);
            report["endpoints"] = to_json(endpoints);
            Status combined = image.status;
            std::ostringstream human;
            human << "local image: " << to_string(image.status) << "\n"
                  << "components: phi1 " << to_string(classes.phi1)
                  << ", phi2 " << to_string(classes.phi2) << "\n"
                  << "endpoints: " << to_string(endpoints.status) << "\n";
            if (endpoints.status == Status::refuted) combined = Status::refuted;
            if (!path_graph_file.empty()) {
                const SampledGraph graph = load_graph(path_graph_file);
                const CheckReport harness = univariate_global_from_local(
                    graph, path, tol, window, threads);
                report["univariate"] = to_json(harness);
                human << "local-to-global harness: "
                      << to_string(harness.status)
                      << (harness.theorem_violation ? " THEOREM-VIOLATION"
                                                    : "")
                      << "\n";
                combined = harness.status;
            }
            json settings = settings_json(tol, threads, seed);
            settings["window"] = window;
            emit(out, as_json, "path-check", settings, report, human.str());
            return exit_code(combined);
        }

        if (*catalog_cmd) {
            if (catalog_name.empty()) {
                json listing = json::array();
                std::ostringstream human;
                for (const std::string& name : catalog_names()) {
                    json entry;
                    entry["name"] = name;
                    entry["description"] = catalog_description(name);
                    listing.push_back(std::move(entry));
                    human << name << "  --  " << catalog_description(name)
                          << "\n";
                }
                emit(out, as_json, "catalog", settings_json(tol, threads, seed),
                     listing, human.str());
                return 0;
            }
            const auto params = parse_params(catalog_params);
            if (catalog_at.empty()) {
                json report;
                report["name"] = catalog_name;
                report["description"] = catalog_description(catalog_name);
                report["domain_dim"] =
                    catalog_operator(catalog_name, params).domain_dim;
                std::string human =
                    catalog_name + "  --  " +
                    catalog_description(catalog_name) + "\n";
                if (const auto radius = catalog_declared_radius(catalog_name)) {
                    report["declared_local_radius"] = *radius;
                    human += "declared locally monotone radius: " +
                             format_double(*radius) + "\n";
                }
                emit(out, as_json, "catalog", settings_json(tol, threads, seed),
                     report, human);
                return 0;
            }
            const Vector x = parse_vector(catalog_at);
            const std::vector<Vector> values =
                catalog_eval(catalog_name, params, x);
            json report;
            report["name"] = catalog_name;
            report["at"] = x;
            json vals = json::array();
            for (const Vector& v : values) vals.push_back(v);
            report["values"] = std::move(vals);
            report["in_domain"] = !values.empty();
            std::ostringstream human;
            if (values.empty()) {
                human << "outside the domain (empty value set)\n";
            } else {
                for (const Vector& v : values) {
                    human << "(";
                    for (std::size_t d = 0; d < v.size(); ++d)
                        human << (d ? "," : "") << format_double(v[d]);
                    human << ")\n";
                }
            }
            emit(out, as_json, "catalog", settings_json(tol, threads, seed), report,
                 human.str());
            return 0;
        }

        if (*sample_cmd) {
            SampledGraph graph(1, {});
            std::size_t visited = 0, hits = 0;
            if (!sample_generate.empty()) {
                GeneratorSpec spec;
                spec.kind = parse_generator_kind(sample_generate);
                spec.seed = seed;
                spec.params = parse_params(sample_graph.params);
                graph = generate_random(spec).graph;
                visited = hits = graph.size();
            } else {
                if (sample_graph.catalog.empty() || sample_graph.grid.empty())
                    throw ContractError(
                        "sample needs --catalog NAME --grid SPEC or "
                        "--generate KIND");
                const OperatorSpec op = catalog_operator(
                    sample_graph.catalog, parse_params(sample_graph.params));
                SamplingSpec sampling;
                if (sample_scheme == "grid")
                    sampling.scheme = SamplingSpec::Scheme::grid;
                else if (sample_scheme == "path-trace")
                    sampling.scheme = SamplingSpec::Scheme::path_trace;
                else
                    throw ContractError("unknown sampling scheme '" +
                                        sample_scheme + "'");
                sampling.window =
                    parse_grid(sample_graph.grid, op.domain_dim);
                SampleResult result = sample_operator(op, sampling);
                graph = std::move(result.graph);
                visited = result.nodes_visited;
                hits = result.domain_hits;
            }
            GraphFormat format = sample_format.empty()
                                     ? graph_format_from_path(sample_out)
                                 : sample_format == "json" ? GraphFormat::json
                                 : sample_format == "csv"
                                     ? GraphFormat::csv
                                     : throw ContractError(
                                           "unknown format '" + sample_format +
                                           "'");
            save_graph(graph, sample_out, format);
            json report;
            report["points"] = graph.size();
            report["nodes_visited"] = visited;
            report["domain_hits"] = hits;
            report["out"] = sample_out;
            std::ostringstream human;
            human << "sampled " << graph.size() << " points (" << hits
                  << " domain hits of " << visited << " nodes) -> "
                  << sample_out << "\n";
            if (graph.empty())
                human << "warning: empty graph (no grid node hit the "
                         "domain)\n";
            emit(out, as_json, "sample", settings_json(tol, threads, seed), report,
                 human.str());
            return graph.empty() ? 2 : 0;
        }

        if (*plot_cmd) {
            const SampledGraph graph = resolve_graph(plot_graph);
            std::ofstream file(plot_out, std::ios::binary);
            if (!file)
                throw ContractError("cannot open '" + plot_out +
                                    "' for writing");
            write_plot_data(graph, file);
            json report;
            report["out"] = plot_out;
            report["points"] = graph.size();
            emit(out, as_json, "plot", settings_json(tol, threads, seed), report,
                 "wrote plot data for " + std::to_string(graph.size()) +
                     " points to " + plot_out + "\n");
            return 0;
        }
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }

    err << "error: no command dispatched\n";
    return 64;
}

}  // namespace mono::cli
