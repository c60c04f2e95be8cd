#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

/// A point in R^n. Entries must be finite; validation happens where vectors
/// enter the system (graph construction, file ingestion, catalog evaluation).
using Vector = std::vector<double>;

/// Raised when a caller breaks an operation's stated precondition
/// (dimension mismatch, invalid index, non-finite input, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised on malformed input files; message carries line/offset context.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on unknown catalog or generator keys.
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One element (x, y) of an operator graph: x is the domain point,
/// y the associated value/dual point. Both live in R^n for the same n.
struct GraphPoint {
    Vector x;
    Vector y;

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

bool all_finite(const Vector& v);

namespace detail {
class KdTree;
}

/// A finite sampled stand-in for an operator graph. Immutable after
/// construction: all checkers treat it as a value and may scan it from
/// several threads concurrently. Point order is preserved exactly as given;
/// every verdict and witness index below refers to this order.
class SampledGraph {
  public:
    SampledGraph(std::size_t dim, std::vector<GraphPoint> points,
                 std::string name = "");
    SampledGraph(const SampledGraph&);
    SampledGraph(SampledGraph&&) noexcept;
    SampledGraph& operator=(const SampledGraph&);
    SampledGraph& operator=(SampledGraph&&) noexcept;
    ~SampledGraph();

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::string& name() const { return name_; }
    const std::vector<GraphPoint>& points() const { return points_; }

    /// Bounds-checked access; throws ContractError on a bad index.
    const GraphPoint& point(std::size_t i) const;

    /// Near-neighbor acceleration index over the product-space points.
    /// Built once at construction; the graph never mutates afterwards.
    const detail::KdTree& index() const { return *index_; }

    /// Value-semantics enlargement: a new graph with `p` appended at the end.
    SampledGraph with_appended(GraphPoint p) const;

  private:
    std::size_t dim_ = 0;
    std::vector<GraphPoint> points_;
    std::string name_;
    std::unique_ptr<detail::KdTree> index_;
};

/// A ball in product space R^{2n} around a graph point. Stands in for the
/// neighborhoods of the local monotonicity definitions; a single radius is
/// enough for every catalog operator.
struct NeighborhoodSpec {
    GraphPoint center;
    double radius = 0.0;
};

constexpr double kDefaultTolerance = 1e-9;

}  // namespace mono
