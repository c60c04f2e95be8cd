#include "mono/scan.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mono/geometry.hpp"

namespace mono {

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

namespace {

struct MonotoneRow {
    bool has_pairs = false;
    double min_margin = 0.0;
    bool has_violation = false;
    std::size_t violation_col = 0;  // position in idx
    double violation_margin = 0.0;
};

// Scans row `a` of the pair triangle: pairs (a, b) for b in (a, m).
MonotoneRow monotone_row(const SampledGraph& graph,
                         std::span<const std::size_t> idx, std::size_t a,
                         double tol) {
    MonotoneRow row;
    const GraphPoint& p = graph.points()[idx[a]];
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const double margin = monotonicity_margin(p, graph.points()[idx[b]]);
        if (!row.has_pairs || margin < row.min_margin) row.min_margin = margin;
        row.has_pairs = true;
        if (!row.has_violation && margin < -tol) {
            row.has_violation = true;
            row.violation_col = b;
            row.violation_margin = margin;
        }
    }
    return row;
}

MonotoneScan fold_monotone_rows(std::span<const std::size_t> idx,
                                std::span<const MonotoneRow> rows) {
    MonotoneScan result;
    const std::size_t m = idx.size();
    result.pairs = m < 2 ? 0 : m * (m - 1) / 2;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const MonotoneRow& row = rows[a];
        if (!row.has_pairs) continue;
        if (!result.min_margin || row.min_margin < *result.min_margin)
            result.min_margin = row.min_margin;
        if (row.has_violation && !result.violation) {
            result.violation = IndexPair{idx[a], idx[row.violation_col]};
            result.violation_margin = row.violation_margin;
        }
    }
    return result;
}

struct ModulusRow {
    double r_max = 0.0;
    bool has_attaining = false;
    std::size_t attaining_col = 0;
    std::size_t used = 0;
    std::size_t skipped = 0;
};

ModulusRow modulus_row(const SampledGraph& graph,
                       std::span<const std::size_t> idx, std::size_t a) {
    ModulusRow row;
    const GraphPoint& p = graph.points()[idx[a]];
    const std::size_t n = graph.dim();
    double xnorm2 = 0.0;
    for (std::size_t d = 0; d < n; ++d) xnorm2 += p.x[d] * p.x[d];
    const double skip_below = 1e-12 * (1.0 + std::sqrt(xnorm2));
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const GraphPoint& q = graph.points()[idx[b]];
        double dx2 = 0.0;
        for (std::size_t d = 0; d < n; ++d) {
            const double diff = p.x[d] - q.x[d];
            dx2 += diff * diff;
        }
        // The defining inequality is vacuous when the domain points coincide.
        if (std::sqrt(dx2) <= skip_below) {
            ++row.skipped;
            continue;
        }
        ++row.used;
        const double margin = monotonicity_margin(p, q);
        const double ratio = std::max(0.0, -margin / dx2);
        if (ratio > row.r_max) {
            row.r_max = ratio;
            row.has_attaining = ratio > 0.0;
            row.attaining_col = b;
        }
    }
    return row;
}

ModulusScan fold_modulus_rows(std::span<const std::size_t> idx,
                              std::span<const ModulusRow> rows) {
    ModulusScan result;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const ModulusRow& row = rows[a];
        result.pairs_used += row.used;
        result.pairs_skipped += row.skipped;
        if (row.r_max > result.r_hat) {
            result.r_hat = row.r_max;
            if (row.has_attaining)
                result.attaining = IndexPair{idx[a], idx[row.attaining_col]};
        }
    }
    return result;
}

}  // namespace

MonotoneScan monotone_scan_serial(const SampledGraph& graph,
                                  std::span<const std::size_t> idx,
                                  double tol) {
    const std::size_t m = idx.size();
    std::vector<MonotoneRow> rows(m == 0 ? 0 : m - 1);
    for (std::size_t a = 0; a + 1 < m; ++a)
        rows[a] = monotone_row(graph, idx, a, tol);
    return fold_monotone_rows(idx, rows);
}

ModulusScan modulus_scan_serial(const SampledGraph& graph,
                                std::span<const std::size_t> idx) {
    const std::size_t m = idx.size();
    std::vector<ModulusRow> rows(m == 0 ? 0 : m - 1);
    for (std::size_t a = 0; a + 1 < m; ++a)
        rows[a] = modulus_row(graph, idx, a);
    return fold_modulus_rows(idx, rows);
}

MonotoneScan monotone_scan(const SampledGraph& graph,
                           std::span<const std::size_t> idx, double tol,
                           int threads) {
    const std::size_t m = idx.size();
#ifdef MONO_HAVE_OPENMP
    if (threads > 1 && m >= 128) {
        std::vector<MonotoneRow> rows(m - 1);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(m) - 1; ++a)
            rows[static_cast<std::size_t>(a)] =
                monotone_row(graph, idx, static_cast<std::size_t>(a), tol);
        return fold_monotone_rows(idx, rows);
    }
#else
    (void)threads;
#endif
    return monotone_scan_serial(graph, idx, tol);
}

ModulusScan modulus_scan(const SampledGraph& graph,
                         std::span<const std::size_t> idx, int threads) {
    const std::size_t m = idx.size();
#ifdef MONO_HAVE_OPENMP
    if (threads > 1 && m >= 128) {
        std::vector<ModulusRow> rows(m - 1);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(m) - 1; ++a)
            rows[static_cast<std::size_t>(a)] =
                modulus_row(graph, idx, static_cast<std::size_t>(a));
        return fold_modulus_rows(idx, rows);
    }
#else
    (void)threads;
#endif
    return modulus_scan_serial(graph, idx);
}

}  // namespace mono
