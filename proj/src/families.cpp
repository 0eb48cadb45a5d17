#include "maxspread/families.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maxspread/minor.hpp"
#include "maxspread/report.hpp"
#include "maxspread/series.hpp"

namespace maxspread {

namespace {

Graph centers(FamilyKind kind) {
  return kind == FamilyKind::PlanarSecondKind ? complete(2) : empty(center_count(kind));
}

void check_ell(FamilyKind kind, int n, int ell) {
  if (ell < min_ell(kind) || ell > max_ell(kind, n)) {
    throw std::invalid_argument(std::string(to_string(kind)) + ": l=" + std::to_string(ell) +
                                " outside [" + std::to_string(min_ell(kind)) + ", " +
                                std::to_string(max_ell(kind, n)) + "] for n=" + std::to_string(n));
  }
}

}  // namespace

Graph build_family(FamilyKind kind, int n, std::optional<int> ell) {
  if (n < 4) throw std::invalid_argument("build_family: n must be >= 4");
  if (kind == FamilyKind::DoubleWheel) {
    if (ell) throw std::invalid_argument("build_family: the double wheel takes no l");
    return join(empty(2), cycle(n - 2));
  }
  if (!ell) throw std::invalid_argument("build_family: l is required for " + std::string(to_string(kind)));
  check_ell(kind, n, *ell);
  LinearForestSpec forest;
  forest.parts.push_back(*ell);
  forest.parts.resize(static_cast<std::size_t>(n - center_count(kind) - *ell) + 1, 1);
  return build_linear_family(kind, forest);
}

Graph build_linear_family(FamilyKind kind, const LinearForestSpec& forest) {
  if (!has_ell(kind)) throw std::invalid_argument("build_linear_family: not a linear family");
  return join(centers(kind), linear_forest(forest));
}

LinearForestSpec merge(const LinearForestSpec& forest) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(forest.parts.size()); ++i)
    if (forest.parts[i] >= 2) idx.push_back(i);
  if (idx.size() < 2) throw std::invalid_argument("merge: needs two parts of size >= 2");
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return forest.parts[a] > forest.parts[b]; });
  const int lo = std::min(idx[0], idx[1]);
  const int hi = std::max(idx[0], idx[1]);
  LinearForestSpec out = forest;
  out.parts[lo] = forest.parts[lo] + forest.parts[hi] - 1;
  out.parts[hi] = 1;
  return out;
}

SymmetricMatrix family_quotient(FamilyKind kind, int n, int ell) {
  if (!has_ell(kind)) throw std::invalid_argument("family_quotient: not a linear family");
  check_ell(kind, n, ell);
  const int c = center_count(kind);
  const int t = n - c - ell;
  const int size = 1 + ell + (t > 0 ? 1 : 0);
  SymmetricMatrix q(size);
  q.set_symmetric(0, 0, center_edges(kind));
  const double rc = std::sqrt(static_cast<double>(c));
  for (int j = 0; j < ell; ++j) q.set_symmetric(0, 1 + j, rc);
  for (int j = 0; j + 1 < ell; ++j) q.set_symmetric(1 + j, 2 + j, 1.0);
  if (t > 0) q.set_symmetric(0, size - 1, std::sqrt(static_cast<double>(c) * t));
  return q;
}

namespace {

struct SecularValue {
  double f = 0.0;
  double df = 0.0;
};

// F(lambda) = lambda - s - c t / lambda - c 1'(lambda I - A_l)^{-1} 1 and its
// derivative, via a Thomas solve of the tridiagonal system.
SecularValue secular(double lambda, int c, int s, int t, int ell, std::vector<double>& work,
                     std::vector<double>& y) {
  work.resize(ell);
  y.resize(ell);
  // Forward sweep on diag lambda, off-diagonals -1, right-hand side 1.
  double denom = lambda;
  work[0] = -1.0 / denom;
  y[0] = 1.0 / denom;
  for (int i = 1; i < ell; ++i) {
    denom = lambda + work[i - 1];
    work[i] = -1.0 / denom;
    y[i] = (1.0 + y[i - 1]) / denom;
  }
  for (int i = ell - 2; i >= 0; --i) y[i] -= work[i] * y[i + 1];
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < ell; ++i) {
    sum += y[i];
    sq += y[i] * y[i];
  }
  SecularValue v;
  v.f = lambda - s - c * t / lambda - c * sum;
  v.df = 1.0 + c * t / (lambda * lambda) + c * sq;
  return v;
}

// Root of the increasing function F on [lo, hi] with F(lo) < 0 < F(hi).
double secular_root(double lo, double hi, int c, int s, int t, int ell) {
  std::vector<double> work, y;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const auto v = secular(x, c, s, t, ell, work, y);
    if (v.f == 0.0) return x;
    if (v.f < 0.0) lo = x; else hi = x;
    double next = x - v.f / v.df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x) ||
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return next;
    }
    x = next;
  }
  throw ConvergenceError("secular root did not converge");
}

}  // namespace

FamilyExtremes family_extremes(FamilyKind kind, int n, int ell, ExtremeMethod method) {
  check_ell(kind, n, ell);
  const int c = center_count(kind);
  const int s = center_edges(kind);
  const int t = n - c - ell;
  FamilyExtremes out;
  switch (method) {
    case ExtremeMethod::DenseFull: {
      const auto r = eigenvalues_sym(build_family(kind, n, ell), {.vectors = false});
      out.lambda1 = r.lambda1();
      out.lambdan = r.lambdan();
      return out;
    }
    case ExtremeMethod::Secular: {
      std::vector<double> work, y;
      const double edge = 2.0;
      if (secular(edge, c, s, t, ell, work, y).f < 0.0 &&
          secular(-edge, c, s, t, ell, work, y).f > 0.0) {
        out.lambda1 = secular_root(edge, n, c, s, t, ell);
        out.lambdan = secular_root(-n, -edge, c, s, t, ell);
        return out;
      }
      [[fallthrough]];  // an extreme eigenvalue inside [-2, 2]
    }
    case ExtremeMethod::DenseQuotient: {
      const auto r = eigen_symmetric(family_quotient(kind, n, ell), {.vectors = false});
      out.lambda1 = r.lambda1();
      out.lambdan = r.lambdan();
      if (c == 2) {
        out.lambda1 = std::max(out.lambda1, -static_cast<double>(s));
        out.lambdan = std::min(out.lambdan, -static_cast<double>(s));
      }
      if (t >= 2) {
        out.lambda1 = std::max(out.lambda1, 0.0);
        out.lambdan = std::min(out.lambdan, 0.0);
      }
      return out;
    }
  }
  throw std::logic_error("unknown extreme method");
}

MergeTrial merge_trial(FamilyKind kind, const LinearForestSpec& forest) {
  MergeTrial trial;
  trial.before = forest;
  if (forest.nontrivial_parts() < 2) return trial;
  trial.after = merge(forest);
  const auto a = eigenvalues_sym(build_linear_family(kind, trial.before), {.vectors = false});
  const auto b = eigenvalues_sym(build_linear_family(kind, trial.after), {.vectors = false});
  trial.lambda1_before = a.lambda1();
  trial.lambdan_before = a.lambdan();
  trial.lambda1_after = b.lambda1();
  trial.lambdan_after = b.lambdan();
  const double up = trial.lambda1_after - trial.lambda1_before;
  const double down = trial.lambdan_before - trial.lambdan_after;
  if (up < -kMergeResolution || down < -kMergeResolution) {
    trial.outcome = MergeOutcome::Violation;
  } else if (up <= kMergeResolution || down <= kMergeResolution) {
    trial.outcome = MergeOutcome::Inconclusive;
  } else {
    trial.outcome = MergeOutcome::Ok;
  }
  return trial;
}

LinearForestSpec random_composition(int total, std::mt19937_64& rng) {
  if (total < 1) throw std::invalid_argument("random_composition: total must be positive");
  LinearForestSpec f;
  int run = 1;
  for (int gap = 0; gap + 1 < total; ++gap) {
    if (rng() & 1u) {
      f.parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  f.parts.push_back(run);
  return f;
}

MergeExperiment merge_monotonicity_experiment(FamilyKind kind, int trials, int n,
                                              std::uint64_t seed) {
  if (!has_ell(kind)) throw std::invalid_argument("merge experiment: not a linear family");
  if (n < 8) throw std::invalid_argument("merge experiment: n must be >= 8");
  if (trials < 1) throw std::invalid_argument("merge experiment: trials must be >= 1");
  MergeExperiment ex{kind, n, trials, seed, 0, 0, 0, std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
  std::mt19937_64 rng(seed);
  const int total = n - center_count(kind);
  std::vector<LinearForestSpec> forests;
  for (int i = 0; i < trials; ++i) {
    LinearForestSpec f;
    do {
      f = random_composition(total, rng);
    } while (f.nontrivial_parts() < 2);
    forests.push_back(std::move(f));
  }
  std::vector<MergeTrial> results(forests.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < trials; ++i) results[i] = merge_trial(kind, forests[i]);
  for (const auto& r : results) {
    switch (r.outcome) {
      case MergeOutcome::Violation: ++ex.violations; break;
      case MergeOutcome::Inconclusive: ++ex.inconclusive; break;
      case MergeOutcome::Skipped: ++ex.skipped; continue;
      case MergeOutcome::Ok: break;
    }
    ex.min_margin_top = std::min(ex.min_margin_top, r.lambda1_after - r.lambda1_before);
    ex.min_margin_bottom = std::min(ex.min_margin_bottom, r.lambdan_before - r.lambdan_after);
  }
  return ex;
}

double SeriesResidual::bound(int K) const {
  return ell * std::pow(2.0 / std::abs(lambda), K + 1);
}

SeriesResidual eigenvector_series_residual(FamilyKind kind, int n, int ell, Extreme which,
                                           int Kmax) {
  if (Kmax < 0) throw std::invalid_argument("eigenvector series: K must be >= 0");
  const auto g = build_family(kind, n, ell);
  const auto r = eigenvalues_sym(g);
  const bool top = which == Extreme::Top;
  SeriesResidual out;
  out.ell = ell;
  out.lambda = top ? r.lambda1() : r.lambdan();
  if (std::abs(out.lambda) < 2.0) {
    throw std::invalid_argument("eigenvector series: |lambda| < 2 (" + std::to_string(out.lambda) + ")");
  }
  const auto& v = top ? r.vec_top : r.vec_bottom;
  const int c = center_count(kind);
  std::vector<double> alpha(ell);
  for (int j = 0; j < ell; ++j) alpha[j] = v[c + j] / v[0];
  // term_k = c lambda^{-(k+1)} A_l^k 1
  std::vector<double> term(ell, c / out.lambda), next(ell), partial(ell, 0.0);
  for (int K = 0; K <= Kmax; ++K) {
    double worst = 0.0;
    for (int j = 0; j < ell; ++j) {
      partial[j] += term[j];
      worst = std::max(worst, std::abs(alpha[j] - partial[j]));
    }
    out.residuals.push_back(worst);
    for (int j = 0; j < ell; ++j) {
      double acc = 0.0;
      if (j > 0) acc += term[j - 1];
      if (j + 1 < ell) acc += term[j + 1];
      next[j] = acc / out.lambda;
    }
    term.swap(next);
  }
  return out;
}

namespace {

const std::vector<RatPoly>& engine_coefficients(FamilyKind kind) {
  static const auto outer = solve_lambda_series(family_a_list(FamilyKind::OuterplanarLinear, 6), 6);
  static const auto first = solve_lambda_series(family_a_list(FamilyKind::PlanarFirstKind, 6), 6);
  static const auto second = solve_lambda_series(family_a_list(FamilyKind::PlanarSecondKind, 6), 6);
  switch (kind) {
    case FamilyKind::OuterplanarLinear: return outer;
    case FamilyKind::PlanarFirstKind: return first;
    case FamilyKind::PlanarSecondKind: return second;
    default: throw std::invalid_argument("no series for the double wheel");
  }
}

std::string_view method_name(ExtremeMethod m) {
  switch (m) {
    case ExtremeMethod::DenseFull: return "dense-full";
    case ExtremeMethod::DenseQuotient: return "dense-quotient";
    case ExtremeMethod::Secular: return "secular";
  }
  return "?";
}

}  // namespace

SpreadScanReport scan_argmax(FamilyKind kind, int n, const ScanOptions& options) {
  if (!has_ell(kind)) throw std::invalid_argument("scan_argmax: family has no path parameter");
  if (n < 8) throw std::invalid_argument("scan_argmax: n must be >= 8");
  const auto& c = engine_coefficients(kind);
  SpreadScanReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.method = method_name(options.method);
  const int lo = min_ell(kind), hi = max_ell(kind, n);
  rep.rows.resize(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic, 4)
  for (int ell = lo; ell <= hi; ++ell) {
    const auto e = family_extremes(kind, n, ell, options.method);
    auto& row = rep.rows[ell - lo];
    row.ell = ell;
    row.lambda1 = e.lambda1;
    row.lambdan = e.lambdan;
    row.spread = e.spread();
    row.series_spread = spread_series_eval(c, n, ell, kind);
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& r : rep.rows) best = std::max(best, r.spread);
  for (const auto& r : rep.rows)
    if (r.spread >= best - options.tie_tolerance * std::abs(best)) rep.argmax.push_back(r.ell);
  rep.predicted = predicted_ell(kind, n);
  rep.onset = rep.argmax.size() == 1 && rep.argmax.front() == rep.predicted;
  int prev = 0;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    const double d = rep.rows[i].spread - rep.rows[i - 1].spread;
    const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (sign != 0 && prev != 0 && sign != prev) ++rep.sign_changes;
    if (sign != 0) prev = sign;
  }
  rep.unimodal = rep.sign_changes <= 1;
  return rep;
}

std::string to_json(const SpreadScanReport& r) {
  Json j = Json::object();
  j["kind"] = std::string(to_string(r.kind));
  j["n"] = r.n;
  j["method"] = r.method;
  j["predicted_ell0"] = r.predicted;
  j["argmax_ell"] = r.argmax;
  j["onset"] = r.onset;
  j["sign_changes"] = r.sign_changes;
  j["unimodal"] = r.unimodal;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o = Json::object();
    o["ell"] = row.ell;
    o["lambda1"] = row.lambda1;
    o["lambdan"] = row.lambdan;
    o["spread"] = row.spread;
    o["series_spread"] = row.series_spread;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return dump_json(j);
}

std::string to_csv(const SpreadScanReport& r) {
  std::string out = "ell,lambda1,lambdan,spread,series_spread\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.ell) + ',' + format_double(row.lambda1) + ',' +
           format_double(row.lambdan) + ',' + format_double(row.spread) + ',' +
           format_double(row.series_spread) + '\n';
  }
  return out;
}

PlanarComparison compare_planar_candidates(int n) {
  if (n < 10) throw std::invalid_argument("compare_planar_candidates: n must be >= 10");
  PlanarComparison cmp;
  cmp.n = n;
  const auto first = scan_argmax(FamilyKind::PlanarFirstKind, n);
  const auto second = scan_argmax(FamilyKind::PlanarSecondKind, n);
  cmp.first_argmax = first.argmax.front();
  cmp.second_argmax = second.argmax.front();
  cmp.first_predicted = first.predicted;
  cmp.first_best =
      family_extremes(FamilyKind::PlanarFirstKind, n, cmp.first_argmax, ExtremeMethod::DenseQuotient).spread();
  cmp.first_at_predicted =
      family_extremes(FamilyKind::PlanarFirstKind, n, cmp.first_predicted, ExtremeMethod::DenseQuotient).spread();
  cmp.second_best =
      family_extremes(FamilyKind::PlanarSecondKind, n, cmp.second_argmax, ExtremeMethod::DenseQuotient).spread();
  cmp.double_wheel = spread(build_family(FamilyKind::DoubleWheel, n));
  cmp.double_wheel_closed = std::sqrt(8.0 * n - 12.0);
  cmp.margin_second = cmp.first_at_predicted - cmp.second_best;
  cmp.margin_wheel = cmp.first_at_predicted - cmp.double_wheel;
  cmp.predicted_margin = (2.0 / 3.0 - 0.5) * 2.0 / std::sqrt(2.0 * n - 4.0);
  cmp.first_strictly_largest = cmp.margin_second > 0.0 && cmp.margin_wheel > 0.0 &&
                               cmp.first_best >= cmp.first_at_predicted;
  return cmp;
}

std::string to_json(const PlanarComparison& c) {
  Json j = Json::object();
  j["n"] = c.n;
  j["first_kind"] = {{"argmax_ell", c.first_argmax},
                     {"predicted_ell0", c.first_predicted},
                     {"best_spread", c.first_best},
                     {"spread_at_ell0", c.first_at_predicted}};
  j["second_kind"] = {{"argmax_ell", c.second_argmax}, {"best_spread", c.second_best}};
  j["double_wheel"] = {{"spread", c.double_wheel}, {"closed_form", c.double_wheel_closed}};
  j["margin_vs_second_kind"] = c.margin_second;
  j["margin_vs_double_wheel"] = c.margin_wheel;
  j["predicted_margin"] = c.predicted_margin;
  j["first_kind_strictly_largest"] = c.first_strictly_largest;
  return dump_json(j);
}

std::string_view to_string(GraphClass c) {
  return c == GraphClass::Outerplanar ? "outerplanar" : "planar";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "outerplanar") return GraphClass::Outerplanar;
  if (name == "planar") return GraphClass::Planar;
  return std::nullopt;
}

namespace {

Graph graph_from_mask(int n, std::uint32_t mask, const std::vector<Edge>& pairs) {
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (mask >> b & 1u) edges.push_back(pairs[b]);
  return Graph::from_edges(n, edges);
}

std::pair<std::vector<int>, std::vector<long long>> signature(const Graph& g) {
  std::vector<int> deg(g.n());
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  std::vector<long long> spec;
  for (double x : eigenvalues_sym(g, {.vectors = false}).values)
    spec.push_back(std::llround(x * 1e7));
  return {deg, spec};
}

}  // namespace

ExhaustiveResult exhaustive_max_spread(int n, GraphClass graph_class) {
  if (n < 1 || n > kExhaustiveMaxN) {
    throw std::invalid_argument("exhaustive_max_spread: n must be in [1, " +
                                std::to_string(kExhaustiveMaxN) + "]");
  }
  ExhaustiveResult res;
  res.n = n;
  res.graph_class = graph_class;
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int E = static_cast<int>(pairs.size());
  res.masks = std::uint64_t{1} << E;
  int bound = E;
  if (graph_class == GraphClass::Outerplanar && n >= 2) bound = 2 * n - 3;
  if (graph_class == GraphClass::Planar && n >= 3) bound = 3 * n - 6;

  std::vector<std::uint32_t> masks;
  for (std::uint64_t m = 0; m < res.masks; ++m)
    if (std::popcount(m) <= bound) masks.push_back(static_cast<std::uint32_t>(m));
  res.candidates = masks.size();

  std::vector<double> spreads(masks.size());
#pragma omp parallel
  {
    SymmetricMatrix a(n);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::fill(a.a.begin(), a.a.end(), 0.0);
      for (int b = 0; b < E; ++b)
        if (masks[i] >> b & 1u) a.set_symmetric(pairs[b].first, pairs[b].second, 1.0);
      spreads[i] = eigen_symmetric(a, {.vectors = false, .policy = KernelPolicy::Serial}).spread();
    }
  }
  std::vector<std::size_t> order(masks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return spreads[x] != spreads[y] ? spreads[x] > spreads[y] : masks[x] < masks[y];
  });

  constexpr double kTie = 1e-9;
  bool found = false;
  std::set<std::pair<std::vector<int>, std::vector<long long>>> seen;
  for (std::size_t i : order) {
    if (found && spreads[i] < res.max_spread - kTie) break;
    const auto g = graph_from_mask(n, masks[i], pairs);
    ++res.classified;
    const auto cls = classify(g);
    const bool in = graph_class == GraphClass::Outerplanar ? cls.is_outerplanar : cls.is_planar;
    if (!in) continue;
    if (!found) {
      found = true;
      res.max_spread = spreads[i];
    }
    ++res.tied_masks;
    if (seen.insert(signature(g)).second) res.witnesses.push_back(g);
  }
  return res;
}

std::string to_json(const ExhaustiveResult& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["class"] = std::string(to_string(r.graph_class));
  j["masks"] = r.masks;
  j["candidates"] = r.candidates;
  j["classified"] = r.classified;
  j["max_spread"] = r.max_spread;
  j["tied_labelled_graphs"] = r.tied_masks;
  Json w = Json::array();
  for (const auto& g : r.witnesses) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    w.push_back(Json{{"n", g.n()}, {"edges", std::move(edges)}});
  }
  j["witnesses"] = std::move(w);
  return dump_json(j);
}

}  // namespace maxspread
