#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maxspread/family_kind.hpp"
#include "maxspread/graph.hpp"
#include "maxspread/spectra.hpp"

namespace maxspread {

/// Family graph on n vertices. `ell` is required for the linear kinds and must
/// be absent for the double wheel. Requires n >= 4.
Graph build_family(FamilyKind kind, int n, std::optional<int> ell = std::nullopt);

/// Center(s) joined to an arbitrary linear forest (linear kinds only).
Graph build_linear_family(FamilyKind kind, const LinearForestSpec& forest);

/// Replaces the two largest parts of size >= 2 (ties to the lower index) by
/// their merge l1 + l2 - 1, kept at the lower index, and a P1 at the higher one.
LinearForestSpec merge(const LinearForestSpec& forest);

/// Ways to get the extreme eigenvalues of a one-path family graph.
///   DenseFull      eigensolver on the whole adjacency matrix
///   DenseQuotient  eigensolver on the (l+2)-dimensional symmetrized quotient
///   Secular        root of lambda - s - c t / lambda - c 1'(lambda - A_l)^{-1} 1
enum class ExtremeMethod { DenseFull, DenseQuotient, Secular };

struct FamilyExtremes {
  double lambda1 = 0.0;
  double lambdan = 0.0;
  double spread() const { return lambda1 - lambdan; }
};

FamilyExtremes family_extremes(FamilyKind kind, int n, int ell, ExtremeMethod method);

/// Quotient over {centers}, v_1, ..., v_l, {isolated vertices} with entries
/// sqrt(b_ij b_ji). Its spectrum plus -s (two centers) and 0 (at least two
/// isolated vertices) covers the extreme eigenvalues of the family graph.
SymmetricMatrix family_quotient(FamilyKind kind, int n, int ell);

enum class MergeOutcome { Ok, Violation, Inconclusive, Skipped };

struct MergeTrial {
  LinearForestSpec before;
  LinearForestSpec after;
  double lambda1_before = 0.0, lambda1_after = 0.0;
  double lambdan_before = 0.0, lambdan_after = 0.0;
  MergeOutcome outcome = MergeOutcome::Skipped;
};

/// Margins at or below this are inconclusive rather than violations.
inline constexpr double kMergeResolution = 1e-9;

MergeTrial merge_trial(FamilyKind kind, const LinearForestSpec& forest);

/// Uniform composition of `total` into positive parts.
LinearForestSpec random_composition(int total, std::mt19937_64& rng);

struct MergeExperiment {
  FamilyKind kind;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int violations = 0;
  int inconclusive = 0;
  int skipped = 0;
  double min_margin_top = 0.0;     // min lambda1' - lambda1
  double min_margin_bottom = 0.0;  // min lambdan - lambdan'
};

/// Random forests (rejection-sampled until two parts >= 2) on n - centers
/// vertices; checks lambda1 up and lambdan down after one merge.
MergeExperiment merge_monotonicity_experiment(FamilyKind kind, int trials, int n,
                                              std::uint64_t seed);

struct SeriesResidual {
  double lambda = 0.0;
  std::vector<double> residuals;  // index K = truncation order 0..Kmax
  double bound(int K) const;      // l (2/|lambda|)^{K+1}
  int ell = 0;
};

/// Max over path vertices of |alpha(v_j) - c sum_{k<=K} lambda^{-(k+1)} (A_l^k 1)_j|
/// with alpha = 1 at the centers, for K = 0..Kmax. Rejects |lambda| < 2.
SeriesResidual eigenvector_series_residual(FamilyKind kind, int n, int ell, Extreme which,
                                           int Kmax);

struct ScanRow {
  int ell = 0;
  double lambda1 = 0.0;
  double lambdan = 0.0;
  double spread = 0.0;
  double series_spread = 0.0;
};

struct SpreadScanReport {
  FamilyKind kind;
  int n = 0;
  std::string method;
  std::vector<ScanRow> rows;
  std::vector<int> argmax;  // every l within the tie tolerance of the maximum
  int predicted = 0;
  bool onset = false;       // argmax == {predicted}
  int sign_changes = 0;     // in spread(l+1) - spread(l)
  bool unimodal = false;
};

struct ScanOptions {
  ExtremeMethod method = ExtremeMethod::Secular;
  double tie_tolerance = 1e-12;  // relative to the maximum spread
};

SpreadScanReport scan_argmax(FamilyKind kind, int n, const ScanOptions& options = {});
std::string to_json(const SpreadScanReport& report);
std::string to_csv(const SpreadScanReport& report);

struct PlanarComparison {
  int n = 0;
  int first_argmax = 0;
  int first_predicted = 0;
  double first_best = 0.0;
  double first_at_predicted = 0.0;
  int second_argmax = 0;
  double second_best = 0.0;
  double double_wheel = 0.0;
  double double_wheel_closed = 0.0;  // sqrt(8n - 12)
  double margin_second = 0.0;        // first(l0) - second(best)
  double margin_wheel = 0.0;         // first(l0) - double wheel
  double predicted_margin = 0.0;     // (2/3 - 1/2) * 2 / sqrt(2n - 4)
  bool first_strictly_largest = false;
};

/// Scans both planar kinds with the secular route, confirms the winners with
/// the dense quotient, and solves the double wheel densely. Requires n >= 10.
PlanarComparison compare_planar_candidates(int n);
std::string to_json(const PlanarComparison& cmp);

enum class GraphClass { Outerplanar, Planar };
std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

struct ExhaustiveResult {
  int n = 0;
  GraphClass graph_class = GraphClass::Outerplanar;
  std::uint64_t masks = 0;       // 2^(n(n-1)/2)
  std::uint64_t candidates = 0;  // masks within the class edge bound
  std::uint64_t classified = 0;  // minor tests run
  double max_spread = 0.0;
  std::uint64_t tied_masks = 0;  // labelled graphs within 1e-9 of the max
  std::vector<Graph> witnesses;  // one per distinct spectrum and degree sequence
};

inline constexpr int kExhaustiveMaxN = 7;

/// Maximum spread over all labelled n-vertex graphs of the class. Rejects
/// n > kExhaustiveMaxN.
ExhaustiveResult exhaustive_max_spread(int n, GraphClass graph_class);
std::string to_json(const ExhaustiveResult& result);

}  // namespace maxspread
