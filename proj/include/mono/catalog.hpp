#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mono/types.hpp"

namespace mono {

/// An evaluable operator T : R^n => R^n. `eval` maps a domain point to the
/// finite set of values T(x); an empty set means x is outside dom T.
/// Evaluation is deterministic for fixed params and the returned vectors are
/// emitted in a stable order.
struct OperatorSpec {
    std::string name;
    std::map<std::string, double> params;
    std::size_t domain_dim = 1;
    std::function<std::vector<Vector>(const Vector&)> eval;

    /// Dimension-checked evaluation.
    std::vector<Vector> operator()(const Vector& x) const;
};

/// Catalog keys, sorted.
std::vector<std::string> catalog_names();

/// One-line description of a catalog entry (for listings).
std::string catalog_description(const std::string& name);

/// Conservative radius at which the entry is locally monotone around every
/// graph point, where one is declared (toolkit metadata: for the step
/// entries with value gap 1 every violating pair sits at product distance
/// > 1, for the planar two-branch operator at distance > 1/2). Entries
/// without a declared radius return nullopt.
std::optional<double> catalog_declared_radius(const std::string& name);

/// Builds the named catalog operator. Unknown name -> LookupError; unknown or
/// out-of-range parameter -> ContractError.
OperatorSpec catalog_operator(const std::string& name,
                              const std::map<std::string, double>& params = {});

/// Convenience: evaluate a catalog entry at a point.
std::vector<Vector> catalog_eval(const std::string& name,
                                 const std::map<std::string, double>& params,
                                 const Vector& x);

/// One grid axis: lo, lo+step, ..., up to hi (inclusive within a small
/// relative slack on the endpoint). A degenerate axis (lo == hi) yields the
/// single value lo.
struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
    static AxisRange from_resolution(double lo, double hi, std::size_t points);
};

struct SamplingSpec {
    enum class Scheme { grid, path_trace, list };
    Scheme scheme = Scheme::grid;
    std::vector<AxisRange> window;  // one per domain axis (grid / path_trace)
    std::vector<Vector> points;     // explicit domain points (list)
};

/// A sampled graph plus how it was obtained. An empty graph is reported
/// explicitly via domain_hits == 0, never silently.
struct SampleResult {
    SampledGraph graph;
    std::size_t nodes_visited = 0;
    std::size_t domain_hits = 0;
};

/// Evaluates the operator over the sampling scheme and collects (x, y) pairs
/// in deterministic order (lexicographic over the grid; one point per value
/// for set-valued entries). Points outside dom T are skipped and counted.
///
/// path_trace is restricted to dim-1 operators: it walks the x-axis in order
/// and emits each value set sorted ascending, so a monotone staircase comes
/// out in path order (consecutive duplicates dropped).
SampleResult sample_operator(const OperatorSpec& op, const SamplingSpec& spec);

}  // namespace mono
