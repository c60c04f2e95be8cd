#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mono/checkers.hpp"
#include "mono/types.hpp"

namespace mono {

struct PathKnot {
    double t = 0.0;
    Vector p;  // point in R^2
};

/// A sampled injective path [0,1] -> R^2: strictly increasing knot times
/// starting at 0 and ending at 1, pairwise-distinct knot points.
class PathSample {
  public:
    explicit PathSample(std::vector<PathKnot> knots);

    const std::vector<PathKnot>& knots() const { return knots_; }
    std::size_t size() const { return knots_.size(); }

    /// Largest gap between consecutive knot times.
    double t_mesh() const { return t_mesh_; }
    /// Largest distance between consecutive knot points; window radii for the
    /// local checks default to 3x this value.
    double image_mesh() const { return image_mesh_; }

  private:
    std::vector<PathKnot> knots_;
    double t_mesh_ = 0.0;
    double image_mesh_ = 0.0;
};

/// Reads the point order of a graph as a path with uniform knot times.
/// Intended for dim-1 graphs sampled with the path-trace scheme, whose point
/// order is the trace order.
PathSample path_from_graph_order(const SampledGraph& graph);

/// Local monotonicity of the path image: around every knot, all knot pairs
/// within `window_radius` (in R^2) must satisfy (x1-x2)(y1-y2) >= -tol.
/// A refutation reports the first failing center knot and pair.
CheckReport check_local_monotone_image(const PathSample& path,
                                       double window_radius,
                                       double tol = kDefaultTolerance,
                                       int threads = 1);

enum class ComponentClass { nondecreasing, nonincreasing, constant, none };
std::string to_string(ComponentClass c);

struct ComponentClasses {
    ComponentClass phi1 = ComponentClass::none;
    ComponentClass phi2 = ComponentClass::none;
};

/// Classifies the two coordinate sequences over the knots; ties are resolved
/// within the tolerance.
ComponentClasses component_monotonicity(const PathSample& path,
                                        double tol = kDefaultTolerance);

/// Checks that each coordinate attains its extrema at the path endpoints and
/// that knots near an endpoint sit in the expected orthant relative to it, or
/// that the coordinate is constant when its endpoint values agree.
/// Requires the local-image check to hold at the same window radius; its
/// failure yields an inconclusive report pointing at the failing window.
CheckReport endpoint_extremality(const PathSample& path, double window_radius,
                                 double tol = kDefaultTolerance);

/// Local-to-global harness for dim-1 graphs: every trace knot must lie on the
/// graph (ContractError otherwise). When the local image check holds at the
/// window radius, the global check is asserted on the graph; disagreement is
/// flagged as a theorem violation and must never be accepted silently.
CheckReport univariate_global_from_local(
    const SampledGraph& graph, const PathSample& trace,
    double tol = kDefaultTolerance,
    std::optional<double> window_radius = std::nullopt, int threads = 1);

/// Path JSON document: {"knots": [{"t": t, "p": [a, b]}, ...]}.
std::string path_to_json_string(const PathSample& path);
PathSample path_from_json_string(const std::string& text);
PathSample load_path(const std::filesystem::path& path);
void save_path(const PathSample& path, const std::filesystem::path& file);

}  // namespace mono
