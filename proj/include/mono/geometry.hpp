#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mono/types.hpp"

namespace mono {

/// The monotonicity margin <p.y - q.y, p.x - q.x> of a pair of graph points.
/// Evaluated in double precision with a fixed left-to-right summation order,
/// so the result is identical on every call and symmetric in (p, q).
double monotonicity_margin(const GraphPoint& p, const GraphPoint& q);

/// Squared Euclidean distance between two graph points in product space
/// R^{2n}: x-coordinates first, then y-coordinates, fixed order.
double product_distance2(const GraphPoint& p, const GraphPoint& q);

double product_distance(const GraphPoint& p, const GraphPoint& q);

namespace detail {

/// Space-partitioning tree over product-space points. Inclusion decisions
/// compare the same squared-distance expression the exhaustive scan uses, and
/// box pruning is conservative under rounding, so query results are identical
/// to the linear scan on every input.
class KdTree {
  public:
    KdTree() = default;
    KdTree(std::size_t point_dims, std::span<const GraphPoint> points);

    /// Indices with ||point_i - center|| <= radius, ascending.
    std::vector<std::size_t> query_ball(const GraphPoint& center,
                                        double radius) const;

    std::size_t size() const { return count_; }

  private:
    struct Node {
        std::size_t begin = 0, end = 0;  // range into order_
        int left = -1, right = -1;
        std::vector<double> box_lo, box_hi;
    };

    void build(int node, std::size_t begin, std::size_t end, int depth);
    void query(int node, std::span<const double> center, double radius2,
               std::vector<std::size_t>& out) const;

    std::size_t dims_ = 0;
    std::size_t count_ = 0;
    std::vector<double> coords_;       // count_ x dims_, row-major
    std::vector<std::size_t> order_;   // permutation of point indices
    std::vector<Node> nodes_;
};

}  // namespace detail

/// Indices of graph points inside the given product-space ball, ascending.
/// Served by the graph's acceleration index.
std::vector<std::size_t> range_query(const SampledGraph& graph,
                                     const NeighborhoodSpec& spec);

/// Reference route: exhaustive linear scan. Kept alongside the indexed route
/// so the two can be checked against each other.
std::vector<std::size_t> range_query_scan(const SampledGraph& graph,
                                          const NeighborhoodSpec& spec);

}  // namespace mono
