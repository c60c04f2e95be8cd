#include "mono/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mono {

bool all_finite(const Vector& v) {
    for (double e : v)
        if (!std::isfinite(e)) return false;
    return true;
}

double monotonicity_margin(const GraphPoint& p, const GraphPoint& q) {
    const std::size_t n = p.x.size();
    if (q.x.size() != n || p.y.size() != n || q.y.size() != n)
        throw ContractError("monotonicity_margin: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        sum += (p.y[i] - q.y[i]) * (p.x[i] - q.x[i]);
    return sum;
}

double product_distance2(const GraphPoint& p, const GraphPoint& q) {
    const std::size_t n = p.x.size();
    if (q.x.size() != n || p.y.size() != n || q.y.size() != n)
        throw ContractError("product_distance2: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = p.x[i] - q.x[i];
        sum += d * d;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double d = p.y[i] - q.y[i];
        sum += d * d;
    }
    return sum;
}

double product_distance(const GraphPoint& p, const GraphPoint& q) {
    return std::sqrt(product_distance2(p, q));
}

// ---------------------------------------------------------------------------
// SampledGraph

SampledGraph::SampledGraph(std::size_t dim, std::vector<GraphPoint> points,
                           std::string name)
    : dim_(dim), points_(std::move(points)), name_(std::move(name)) {
    if (dim_ == 0) throw ContractError("SampledGraph: dim must be positive");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const GraphPoint& p = points_[i];
        if (p.x.size() != dim_ || p.y.size() != dim_)
            throw ContractError("SampledGraph: point " + std::to_string(i) +
                                " has dimension != " + std::to_string(dim_));
        if (!all_finite(p.x) || !all_finite(p.y))
            throw ContractError("SampledGraph: point " + std::to_string(i) +
                                " has a non-finite entry");
    }
    index_ = std::make_unique<detail::KdTree>(2 * dim_, points_);
}

SampledGraph::SampledGraph(const SampledGraph& other)
    : SampledGraph(other.dim_, other.points_, other.name_) {}

SampledGraph::SampledGraph(SampledGraph&&) noexcept = default;

SampledGraph& SampledGraph::operator=(const SampledGraph& other) {
    if (this != &other) *this = SampledGraph(other);
    return *this;
}

SampledGraph& SampledGraph::operator=(SampledGraph&&) noexcept = default;

SampledGraph::~SampledGraph() = default;

const GraphPoint& SampledGraph::point(std::size_t i) const {
    if (i >= points_.size())
        throw ContractError("SampledGraph: point index " + std::to_string(i) +
                            " out of range (size " +
                            std::to_string(points_.size()) + ")");
    return points_[i];
}

SampledGraph SampledGraph::with_appended(GraphPoint p) const {
    std::vector<GraphPoint> pts = points_;
    pts.push_back(std::move(p));
    return SampledGraph(dim_, std::move(pts), name_);
}

// ---------------------------------------------------------------------------
// KdTree

namespace detail {

namespace {
constexpr std::size_t kLeafSize = 16;
}

KdTree::KdTree(std::size_t point_dims, std::span<const GraphPoint> points)
    : dims_(point_dims), count_(points.size()) {
    coords_.resize(count_ * dims_);
    const std::size_t n = dims_ / 2;
    for (std::size_t i = 0; i < count_; ++i) {
        for (std::size_t d = 0; d < n; ++d) coords_[i * dims_ + d] = points[i].x[d];
        for (std::size_t d = 0; d < n; ++d) coords_[i * dims_ + n + d] = points[i].y[d];
    }
    order_.resize(count_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (count_ > 0) {
        nodes_.reserve(2 * count_ / kLeafSize + 2);
        nodes_.emplace_back();
        build(0, 0, count_, 0);
    }
}

void KdTree::build(int node, std::size_t begin, std::size_t end, int depth) {
    Node& nd = nodes_[node];
    nd.begin = begin;
    nd.end = end;
    nd.box_lo.assign(dims_, 0.0);
    nd.box_hi.assign(dims_, 0.0);
    for (std::size_t d = 0; d < dims_; ++d) {
        double lo = coords_[order_[begin] * dims_ + d];
        double hi = lo;
        for (std::size_t k = begin + 1; k < end; ++k) {
            const double v = coords_[order_[k] * dims_ + d];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        nd.box_lo[d] = lo;
        nd.box_hi[d] = hi;
    }
    if (end - begin <= kLeafSize) return;

    // Split along the widest box dimension at the median.
    std::size_t split_dim = 0;
    double widest = -1.0;
    for (std::size_t d = 0; d < dims_; ++d) {
        const double w = nd.box_hi[d] - nd.box_lo[d];
        if (w > widest) {
            widest = w;
            split_dim = d;
        }
    }
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end,
                     [&](std::size_t a, std::size_t b) {
                         return coords_[a * dims_ + split_dim] <
                                coords_[b * dims_ + split_dim];
                     });
    if (widest <= 0.0) return;  // all points coincide; keep as a fat leaf

    const int left = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    const int right = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[node].left = left;
    nodes_[node].right = right;
    build(left, begin, mid, depth + 1);
    build(right, mid, end, depth + 1);
}

std::vector<std::size_t> KdTree::query_ball(const GraphPoint& center,
                                            double radius) const {
    std::vector<std::size_t> out;
    if (count_ == 0) return out;
    const std::size_t n = dims_ / 2;
    if (center.x.size() != n || center.y.size() != n)
        throw ContractError("KdTree::query_ball: center dimension mismatch");
    std::vector<double> c(dims_);
    for (std::size_t d = 0; d < n; ++d) c[d] = center.x[d];
    for (std::size_t d = 0; d < n; ++d) c[n + d] = center.y[d];
    query(0, c, radius * radius, out);
    std::sort(out.begin(), out.end());
    return out;
}

void KdTree::query(int node, std::span<const double> center, double radius2,
                   std::vector<std::size_t>& out) const {
    const Node& nd = nodes_[node];

    // Conservative lower bound on the squared distance from the center to any
    // point in the node box; computed with the same term order as the exact
    // per-point distance so pruning can never exclude an in-ball point.
    double lower = 0.0;
    for (std::size_t d = 0; d < dims_; ++d) {
        double t = 0.0;
        if (center[d] < nd.box_lo[d]) t = nd.box_lo[d] - center[d];
        else if (center[d] > nd.box_hi[d]) t = center[d] - nd.box_hi[d];
        lower += t * t;
    }
    if (lower > radius2) return;

    if (nd.left < 0) {
        for (std::size_t k = nd.begin; k < nd.end; ++k) {
            const std::size_t i = order_[k];
            double dist2 = 0.0;
            for (std::size_t d = 0; d < dims_; ++d) {
                const double diff = coords_[i * dims_ + d] - center[d];
                dist2 += diff * diff;
            }
            if (dist2 <= radius2) out.push_back(i);
        }
        return;
    }
    query(nd.left, center, radius2, out);
    query(nd.right, center, radius2, out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Range queries

static void validate_spec(const SampledGraph& graph,
                          const NeighborhoodSpec& spec) {
    if (spec.center.x.size() != graph.dim() ||
        spec.center.y.size() != graph.dim())
        throw ContractError("range_query: center dimension mismatch");
    if (!(spec.radius > 0.0))
        throw ContractError("range_query: radius must be positive");
}

std::vector<std::size_t> range_query(const SampledGraph& graph,
                                     const NeighborhoodSpec& spec) {
    validate_spec(graph, spec);
    return graph.index().query_ball(spec.center, spec.radius);
}

std::vector<std::size_t> range_query_scan(const SampledGraph& graph,
                                          const NeighborhoodSpec& spec) {
    validate_spec(graph, spec);
    const double r2 = spec.radius * spec.radius;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        // Same expression as product_distance2: x terms then y terms.
        const GraphPoint& p = graph.points()[i];
        double dist2 = 0.0;
        for (std::size_t d = 0; d < graph.dim(); ++d) {
            const double diff = p.x[d] - spec.center.x[d];
            dist2 += diff * diff;
        }
        for (std::size_t d = 0; d < graph.dim(); ++d) {
            const double diff = p.y[d] - spec.center.y[d];
            dist2 += diff * diff;
        }
        if (dist2 <= r2) out.push_back(i);
    }
    return out;
}

}  // namespace mono
