#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "mono/types.hpp"

namespace mono {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Result of a full pairwise monotonicity-margin scan over a point subset.
/// `violation` is the lexicographically smallest pair (by position in `idx`,
/// reported in original graph indices) whose margin falls below -tolerance;
/// `min_margin` is the minimum margin over all scanned pairs.
struct MonotoneScan {
    std::size_t pairs = 0;
    std::optional<double> min_margin;
    std::optional<IndexPair> violation;
    std::optional<double> violation_margin;
};

/// Result of a pairwise hypomonotonicity-ratio scan: r_hat is the largest
/// max(0, -<dy,dx>/||dx||^2) over pairs with a non-negligible domain gap;
/// `attaining` is the lexicographically first maximizer when r_hat > 0.
struct ModulusScan {
    double r_hat = 0.0;
    std::optional<IndexPair> attaining;
    std::size_t pairs_used = 0;
    std::size_t pairs_skipped = 0;
};

/// Reference implementations: plain double loops, fixed order, no threading.
MonotoneScan monotone_scan_serial(const SampledGraph& graph,
                                  std::span<const std::size_t> idx, double tol);
ModulusScan modulus_scan_serial(const SampledGraph& graph,
                                std::span<const std::size_t> idx);

/// Parallel kernels. Rows of the pair triangle are distributed across OpenMP
/// threads; per-row partial results are folded serially in row order, so the
/// outcome is bit-identical to the serial reference for every thread count.
MonotoneScan monotone_scan(const SampledGraph& graph,
                           std::span<const std::size_t> idx, double tol,
                           int threads);
ModulusScan modulus_scan(const SampledGraph& graph,
                         std::span<const std::size_t> idx, int threads);

/// 0, 1, ..., n-1 as an index vector.
std::vector<std::size_t> all_indices(std::size_t n);

}  // namespace mono
