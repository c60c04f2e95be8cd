#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mono/checkers.hpp"
#include "mono/types.hpp"

namespace mono {

/// Discretization of the regular-normal-cone test at a graph point.
/// A unit direction v in product space passes when <v, u - z> <= slack*|u - z|
/// for every neighbor u within locality_radius of the base point z. The true
/// cone condition involves points arbitrarily close to the base; a sample has
/// a resolution floor, hence the slack and the radius are explicit knobs.
struct ConeParams {
    double locality_radius = 0.0;  // rho; <= 0 means "use the graph default"
    double slack = 1e-6;           // epsilon of the directional test
    int directions = 0;            // m; 0 means "per-dimension default"
    int min_neighbors = 0;         // below this the cone is vacuous; 0 = default
};

/// Defaults for a given graph: rho = 3x median nearest-neighbor distance,
/// m = 720 on R^2 graph space and 20*4^d otherwise, min_neighbors = 2d.
ConeParams default_cone_params(const SampledGraph& graph);

/// Quasi-uniform unit directions on the sphere of R^dims (dims 2 or 4);
/// deterministic for fixed (dims, count).
std::vector<Vector> sphere_directions(std::size_t dims, int count);

/// Directions accepted as approximate regular normals to the graph (as a set
/// in R^{2n}) at one of its points. When fewer than min_neighbors samples lie
/// within the locality radius, every direction passes trivially and the set
/// is flagged vacuous -- such a cone must not be trusted downstream.
struct DirectionSet {
    std::size_t at_index = 0;
    std::vector<Vector> directions;
    std::size_t neighbor_count = 0;
    bool vacuous = false;
    ConeParams params;  // resolved values actually used
};

DirectionSet regular_normal_directions(const SampledGraph& graph,
                                       std::size_t at_index,
                                       const ConeParams& params);

/// Positive-semidefiniteness of the sampled coderivative at a graph point:
/// each accepted normal v = (v1, v2) yields the adjoint pair z = v1,
/// w = -v2, which must satisfy <z, w> >= -slack.
struct PSDReport {
    enum class Outcome { psd, violated, inconclusive };
    Outcome outcome = Outcome::inconclusive;
    std::optional<std::pair<Vector, Vector>> violating_direction;  // (z, w)
    std::optional<double> value;                                   // <z, w>
    std::size_t accepted_count = 0;
    std::size_t neighbor_count = 0;
    bool vacuous = false;
};

std::string to_string(PSDReport::Outcome o);

PSDReport coderivative_psd_check(const SampledGraph& graph,
                                 std::size_t at_index,
                                 const ConeParams& params);

/// Combined maximal-monotonicity screen over the whole sampled graph:
/// records the hypomonotonicity modulus, runs the coderivative test at every
/// point, and probes for enlargements. A finite sample cannot distinguish an
/// open graph from its closure, so the probe caveat is always attached when
/// addable points exist even if every per-point test passes.
struct MaxMonoReport {
    Status status = Status::inconclusive;
    double modulus_r_hat = 0.0;
    std::size_t points = 0;
    std::size_t violated_count = 0;
    std::size_t inconclusive_count = 0;
    std::optional<std::size_t> first_violated_index;
    std::optional<PSDReport> first_violation;
    bool caveat_open_graph = false;
    std::vector<GraphPoint> caveat_addable;
    double max_inconclusive_fraction = 0.0;
    double tolerance = 0.0;
    ConeParams params;  // resolved values actually used
};

/// `probes` overrides the default enlargement grid (an inflated bounding box
/// of the product points) used for the open-graph caveat.
MaxMonoReport check_max_monotone_via_coderivative(
    const SampledGraph& graph, const ConeParams& params,
    double tol = kDefaultTolerance, std::span<const GraphPoint> probes = {},
    double max_inconclusive_fraction = 0.25, int threads = 1);

/// The default enlargement grid used by the pipeline caveat probe.
std::vector<GraphPoint> default_probe_grid(const SampledGraph& graph,
                                           std::size_t per_axis = 7);

}  // namespace mono
