#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "mono/types.hpp"

namespace mono {

/// Seeded random graph families for the property harnesses. The same spec
/// always produces the same graph, byte for byte.
struct GeneratorSpec {
    enum class Kind { monotone_pwl, hypo_shift, local_not_global, step };
    Kind kind = Kind::monotone_pwl;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;
};

GeneratorSpec::Kind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorSpec::Kind kind);

/// Generated graph plus the guarantees the generator declares for it.
/// For local-not-global graphs, every product-space ball of radius
/// `declared_radius` around a graph point is monotone while the whole graph
/// is not; `declared_center` is the origin point of the construction.
struct GeneratedGraph {
    SampledGraph graph;
    std::optional<std::size_t> declared_center;
    std::optional<double> declared_radius;
    std::map<std::string, double> resolved_params;
};

/// Kinds:
///   monotone-pwl      subgradient graph of a random convex piecewise-linear
///                     function, per coordinate (params: dim, points, pieces,
///                     span, vertical) -- always globally monotone
///   hypo-shift        monotone-pwl base with y replaced by y - r*x
///                     (params: r, identity_base, + base params) --
///                     hypomonotone with modulus at most r
///   local-not-global  axis-rescaled copy of the example-5.1 graph (params:
///                     a, b, points; a/b default to random scales in
///                     [0.5, 2]) -- locally monotone at the declared radius,
///                     globally refuted
///   step              step function with a random jump location (params:
///                     points, span, height) -- globally refuted across the
///                     jump
GeneratedGraph generate_random(const GeneratorSpec& spec);

}  // namespace mono
