#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mono/catalog.hpp"
#include "mono/scan.hpp"
#include "mono/types.hpp"

namespace mono {

enum class Status { holds, refuted, inconclusive };
std::string to_string(Status s);

/// Verdict of a monotonicity check. When refuted, `witness` is the
/// lexicographically smallest violating pair of graph indices and `margin`
/// its margin; when the check holds, `margin` is the minimum margin observed.
/// `min_margin` always carries the minimum over every scanned pair.
struct CheckReport {
    Status status = Status::inconclusive;
    std::optional<IndexPair> witness;
    std::optional<double> margin;
    std::optional<double> min_margin;
    std::size_t pairs_checked = 0;
    double tolerance = 0.0;
    std::optional<std::size_t> subset_size;   // local checks: |gph T ∩ W|
    std::optional<std::size_t> center_index;  // windowed path scans
    std::optional<double> lambda;             // segment scans: first failing λ
    bool theorem_violation = false;
    std::string detail;
};

/// Largest shift r (over sampled pairs) needed to make the graph monotone:
/// max over pairs with distinct domain points of max(0, -<dy,dx>/||dx||^2).
/// A lower bound for the underlying operator; exact for the sampled graph.
struct ModulusEstimate {
    double r_hat = 0.0;
    std::optional<IndexPair> attaining_pair;
    std::size_t pairs_used = 0;
    std::size_t pairs_skipped = 0;
    bool all_pairs_skipped = false;
};

struct ProbeCandidate {
    std::size_t probe_index = 0;
    double min_margin = 0.0;
    bool addable = false;
    bool already_present = false;
};

/// Outcome of an enlargement probe. `addable` lists probe indices whose
/// margins against every (window-restricted) graph point clear -tolerance and
/// that are not already graph points; any entry refutes sampled maximality.
struct ProbeResult {
    std::vector<ProbeCandidate> candidates;
    std::vector<std::size_t> addable;
    double tolerance = 0.0;
    std::optional<std::size_t> window_size;  // local probe only
};

/// Scans every unordered pair of graph points against the monotonicity
/// inequality. Empty graph -> inconclusive.
CheckReport check_global_monotone(const SampledGraph& graph,
                                  double tol = kDefaultTolerance,
                                  int threads = 1);

/// Same contract restricted to the points inside `spec`.
/// Empty restriction -> inconclusive.
CheckReport check_local_monotone(const SampledGraph& graph,
                                 const NeighborhoodSpec& spec,
                                 double tol = kDefaultTolerance,
                                 int threads = 1);

/// Largest center-to-point distance rho such that the local check at rho
/// still holds; 0 if even the closest pair violates, +infinity if the whole
/// graph is monotone.
double local_radius(const SampledGraph& graph, std::size_t center_index,
                    double tol = kDefaultTolerance, int threads = 1);

ModulusEstimate hypomonotonicity_modulus(const SampledGraph& graph,
                                         double tol = kDefaultTolerance,
                                         int threads = 1);

ProbeResult maximality_probe(const SampledGraph& graph,
                             std::span<const GraphPoint> probes,
                             double tol = kDefaultTolerance, int threads = 1);

ProbeResult local_maximality_probe(const SampledGraph& graph,
                                   const NeighborhoodSpec& spec,
                                   std::span<const GraphPoint> probes,
                                   double tol = kDefaultTolerance,
                                   int threads = 1);

/// Walks the uniform net x_k = p + (q - p) * k/steps, requires the operator
/// to be single-valued along it (ContractError otherwise), and refutes when
/// either <T(x_k) - T(q), p - q> drops below -tol for some k (reported via
/// `lambda`) or some pairwise margin among the net points does.
CheckReport segment_scan(const OperatorSpec& op, const Vector& p,
                         const Vector& q, int steps,
                         double tol = kDefaultTolerance);

}  // namespace mono
