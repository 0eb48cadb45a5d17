#include "maxspread/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "maxspread/families.hpp"
#include "maxspread/series.hpp"
#include "maxspread/spectra.hpp"
#include "maxspread/walks.hpp"

namespace maxspread {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
  }
  return "?";
}

namespace {

constexpr int kSeriesOrder = 6;

struct Grids {
  std::vector<int> convergence_n;
  int argmax_lo = 100;
  int argmax_hi = 300;
  int onset_lo = 8;
  int merge_trials = 100;
  std::vector<int> merge_n{8, 12, 30};
  std::vector<int> closed_n;
  int join_instances = 30;
  int ranking_n = 1000;
  int vector_n = 50;
  int vector_K = 25;
  int interval_lo = 8;
  int interval_hi = 60;
  int exhaustive_hi = 7;
  int walk_hi = 60;
};

Grids grids(bool fast) {
  Grids g;
  if (fast) {
    g.convergence_n = {50, 100, 200, 400};
    g.argmax_hi = 150;
    g.merge_trials = 20;
    g.closed_n = {10, 50, 200};
    g.ranking_n = 400;
    g.interval_hi = 30;
    g.exhaustive_hi = 6;
  } else {
    g.convergence_n = {201, 401, 801, 1601};
    g.closed_n = {10, 50, 200, 500};
  }
  return g;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

Json poly_json(const RatPoly& p) { return Json(p.coeff_strings()); }

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

CheckRecord check_coefficients(const Grids&) {
  CheckRecord r{1, "coefficient-reproduction",
                "derived c1..c5 (one center), c'1..c'5 (two centers) and c''2 equal the "
                "printed tables as exact rational polynomials",
                CheckStatus::Fail};
  bool ok = true;
  const std::pair<FamilyKind, int> cases[] = {{FamilyKind::OuterplanarLinear, 5},
                                              {FamilyKind::PlanarFirstKind, 5},
                                              {FamilyKind::PlanarSecondKind, 2}};
  for (const auto& [kind, K] : cases) {
    const auto rep = compare_coefficients(kind, K);
    Json fam = Json::object();
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      if (!row.has_printed) continue;
      rows.push_back(Json{{"index", row.index}, {"derived", poly_json(row.derived)},
                          {"match", row.equal}});
    }
    const bool match = rep.exact_match_through(K);
    fam["coefficients"] = std::move(rows);
    fam["exact_match"] = match;
    fam["lagrange_burmann_agrees"] = rep.lb_agrees;
    ok = ok && match && rep.lb_checked && rep.lb_agrees;
    r.measured[std::string(to_string(kind))] = std::move(fam);
  }
  r.tolerances["comparison"] = "exact rational equality";
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_c6(const Grids&) {
  CheckRecord r{2, "c6-report",
                "c6 and c'6 derived with the exact sixth walk coefficient, compared term by "
                "term with the printed rows",
                CheckStatus::Reported};
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind}) {
    const auto rep = compare_coefficients(kind, kSeriesOrder);
    const auto& row = rep.rows.at(kSeriesOrder - 1);
    const auto a6 = family_a_list(kind, kSeriesOrder).entries.back();
    r.measured[std::string(to_string(kind))] =
        Json{{"a6", Json{{"p", a6.first.get_str()}, {"q", a6.second.get_str()}}},
             {"derived", poly_json(row.derived)},
             {"printed", poly_json(row.printed)},
             {"agree", row.equal},
             {"difference", poly_json(row.difference)}};
  }
  r.tolerances["comparison"] = "exact rational equality (informational)";
  return r;
}

CheckRecord check_convergence(const Grids& g) {
  CheckRecord r{3, "series-convergence",
                "|lambda(exact) - lambda(series through c6)| at l = l0 decays like n^-3",
                CheckStatus::Fail};
  constexpr double kTarget = -3.0, kWidth = 0.5;
  bool ok = true;
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind}) {
    const auto c = solve_lambda_series(family_a_list(kind, kSeriesOrder), kSeriesOrder);
    std::vector<double> ns, err_top, err_bottom;
    Json points = Json::array();
    double cross = 0.0;
    for (int n : g.convergence_n) {
      const int ell = predicted_ell(kind, n);
      const auto dense = family_extremes(kind, n, ell, ExtremeMethod::DenseFull);
      const auto sec = family_extremes(kind, n, ell, ExtremeMethod::Secular);
      cross = std::max({cross, std::abs(dense.lambda1 - sec.lambda1),
                        std::abs(dense.lambdan - sec.lambdan)});
      const double et = std::abs(dense.lambda1 - lambda_series_eval(c, n, ell, kind, Extreme::Top));
      const double eb =
          std::abs(dense.lambdan - lambda_series_eval(c, n, ell, kind, Extreme::Bottom));
      ns.push_back(n);
      err_top.push_back(et);
      err_bottom.push_back(eb);
      points.push_back(Json{{"n", n}, {"ell", ell}, {"lambda1", dense.lambda1},
                            {"lambdan", dense.lambdan}, {"error_top", et}, {"error_bottom", eb}});
    }
    const double st = loglog_slope(ns, err_top);
    const double sb = loglog_slope(ns, err_bottom);
    ok = ok && std::abs(st - kTarget) <= kWidth && std::abs(sb - kTarget) <= kWidth;
    r.measured[std::string(to_string(kind))] =
        Json{{"points", std::move(points)}, {"slope_top", st}, {"slope_bottom", sb},
             {"dense_vs_secular_max_diff", cross}};
  }
  r.tolerances["slope"] = kTarget;
  r.tolerances["slope_width"] = kWidth;
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_argmax(const Grids& g) {
  CheckRecord r{4, "argmax-formulas",
                "argmax over l of the spread equals ceil((2n-1)/3) with one center and "
                "ceil((2n-2)/3) with two non-adjacent centers",
                CheckStatus::Fail};
  bool ok = true;
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind}) {
    Json below = Json::array(), inside = Json::array();
    int last_deviation = g.onset_lo - 1;
    int dense_mismatch = 0;
    int not_unimodal = 0;
    for (int n = g.onset_lo; n <= g.argmax_hi; ++n) {
      const auto rep = scan_argmax(kind, n);
      bool agree = rep.onset;
      if (n >= g.argmax_lo && !rep.unimodal) ++not_unimodal;
      if (agree && n >= g.argmax_lo) {
        // Confirm that l0 beats its neighbours with the dense quotient solver.
        const int l0 = rep.predicted;
        const double s0 = family_extremes(kind, n, l0, ExtremeMethod::DenseQuotient).spread();
        for (int d : {-1, 1}) {
          const int l = l0 + d;
          if (l < min_ell(kind) || l > max_ell(kind, n)) continue;
          if (family_extremes(kind, n, l, ExtremeMethod::DenseQuotient).spread() >= s0) {
            ++dense_mismatch;
            agree = false;
          }
        }
      }
      if (agree) continue;
      Json dev{{"n", n}, {"argmax_ell", rep.argmax}, {"predicted_ell0", rep.predicted}};
      (n < g.argmax_lo ? below : inside).push_back(std::move(dev));
      last_deviation = n;
    }
    ok = ok && inside.empty();
    r.measured[std::string(to_string(kind))] =
        Json{{"deviations_below_range", std::move(below)},
             {"deviations_in_range", std::move(inside)},
             {"dense_confirmation_failures", dense_mismatch},
             {"non_unimodal_in_range", not_unimodal},
             {"scanned_from", g.onset_lo},
             {"empirical_onset_n0", last_deviation + 1}};
  }
  r.tolerances["range"] = Json::array({g.argmax_lo, g.argmax_hi});
  r.tolerances["tie_tolerance_relative"] = ScanOptions{}.tie_tolerance;
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_merge(const Grids& g, std::uint64_t seed) {
  CheckRecord r{5, "merge-monotonicity",
                "merging two non-trivial paths raises lambda1 and lowers lambdan",
                CheckStatus::Fail};
  bool ok = true;
  std::uint64_t salt = 0;
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind,
                    FamilyKind::PlanarSecondKind}) {
    Json runs = Json::array();
    for (int n : g.merge_n) {
      const std::uint64_t s = seed + 1000 * (++salt);
      const auto ex = merge_monotonicity_experiment(kind, g.merge_trials, n, s);
      ok = ok && ex.violations == 0;
      runs.push_back(Json{{"n", n}, {"seed", s}, {"trials", ex.trials},
                          {"violations", ex.violations}, {"inconclusive", ex.inconclusive},
                          {"min_margin_lambda1", ex.min_margin_top},
                          {"min_margin_lambdan", ex.min_margin_bottom}});
    }
    r.measured[std::string(to_string(kind))] = std::move(runs);
  }
  r.tolerances["margin_resolution"] = kMergeResolution;
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_closed_forms(const Grids& g) {
  CheckRecord r{6, "closed-form-spreads",
                "spread((2K1) v C_{n-2}) = sqrt(8n-12) and spread(K_{2,n-2}) = 2 sqrt(2n-4)",
                CheckStatus::Fail};
  constexpr double kTol = 1e-9;
  bool ok = true;
  Json rows = Json::array();
  for (int n : g.closed_n) {
    const double dw = spread(build_family(FamilyKind::DoubleWheel, n));
    const double kb = spread(complete_bipartite(2, n - 2));
    const double dw_exact = std::sqrt(8.0 * n - 12.0);
    const double kb_exact = 2.0 * std::sqrt(2.0 * n - 4.0);
    ok = ok && std::abs(dw - dw_exact) <= kTol && std::abs(kb - kb_exact) <= kTol;
    rows.push_back(Json{{"n", n}, {"double_wheel", dw}, {"double_wheel_error", dw - dw_exact},
                        {"k2_n_minus_2", kb}, {"k2_n_minus_2_error", kb - kb_exact}});
  }
  r.measured["rows"] = std::move(rows);
  r.tolerances["absolute"] = kTol;
  r.status = pass_if(ok);
  return r;
}

struct RegularPart {
  Graph g;
  int degree = 0;
  std::string label;
};

RegularPart random_regular_part(int size, std::mt19937_64& rng) {
  const int pick = static_cast<int>(rng() % 3);
  if (pick == 0 && size >= 3) return {cycle(size), 2, "C" + std::to_string(size)};
  if (pick == 1) return {complete(size), size - 1, "K" + std::to_string(size)};
  return {empty(size), 0, std::to_string(size) + "K1"};
}

CheckRecord check_join(const Grids& g, std::uint64_t seed) {
  CheckRecord r{7, "regular-join-spectrum",
                "spectrum of G v H for regular G, H from the part spectra and the roots of "
                "(x-k)(x-l) = mn",
                CheckStatus::Fail};
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(seed + 7);
  double worst = 0.0;
  Json rows = Json::array();
  for (int i = 0; i < g.join_instances; ++i) {
    const int m = 1 + static_cast<int>(rng() % 40);
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(60 - m));
    const auto a = random_regular_part(m, rng);
    const auto b = random_regular_part(n, rng);
    RegularJoinInput in{a.degree, b.degree, m, n,
                        eigenvalues_sym(a.g, {.vectors = false}).values,
                        eigenvalues_sym(b.g, {.vectors = false}).values};
    const auto formula = join_regular_spectrum(in);
    const auto dense = eigenvalues_sym(join(a.g, b.g), {.vectors = false}).values;
    double diff = 0.0;
    for (std::size_t k = 0; k < dense.size(); ++k) diff = std::max(diff, std::abs(formula[k] - dense[k]));
    worst = std::max(worst, diff);
    rows.push_back(Json{{"g", a.label}, {"h", b.label}, {"max_abs_diff", diff}});
  }
  r.measured["instances"] = std::move(rows);
  r.measured["max_abs_diff"] = worst;
  r.tolerances["absolute"] = kTol;
  r.status = pass_if(worst <= kTol);
  return r;
}

CheckRecord check_ranking(const Grids& g) {
  CheckRecord r{8, "planar-family-ranking",
                "first kind at l0 beats the double wheel and the best second-kind graph",
                CheckStatus::Fail};
  const auto cmp = compare_planar_candidates(g.ranking_n);
  r.measured = Json::parse(to_json(cmp));
  r.tolerances["ordering"] = "strict";
  r.status = pass_if(cmp.margin_wheel > 0.0 && cmp.margin_second > 0.0);
  return r;
}

CheckRecord check_vector_series(const Grids& g) {
  CheckRecord r{9, "eigenvector-series",
                "path entries of the extreme eigenvectors equal c sum_k lambda^-(k+1) A^k 1",
                CheckStatus::Fail};
  constexpr double kResidualMax = 1e-6;
  constexpr double kRatioSlack = 0.05;
  constexpr double kFloor = 1e-12;  // round-off floor for the ratio and bound checks
  bool ok = true;
  const int n = g.vector_n;
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind,
                    FamilyKind::PlanarSecondKind}) {
    Json fam = Json::object();
    const int ell = predicted_ell(kind, n);
    for (auto which : {Extreme::Top, Extreme::Bottom}) {
      const auto s = eigenvector_series_residual(kind, n, ell, which, g.vector_K);
      double worst_ratio = 0.0;
      bool bound_ok = true;
      for (int K = 0; K <= g.vector_K; ++K) {
        if (s.residuals[K] > s.bound(K) + kFloor) bound_ok = false;
        if (K < g.vector_K && s.residuals[K + 1] > kFloor)
          worst_ratio = std::max(worst_ratio, s.residuals[K + 1] / s.residuals[K]);
      }
      const double limit = 2.0 / std::abs(s.lambda) + kRatioSlack;
      const double res = s.residuals[g.vector_K];
      ok = ok && res < kResidualMax && worst_ratio <= limit && bound_ok;
      fam[which == Extreme::Top ? "top" : "bottom"] =
          Json{{"ell", ell}, {"lambda", s.lambda}, {"residual_K", res},
               {"worst_decay_ratio", worst_ratio}, {"ratio_limit", limit},
               {"within_tail_bound", bound_ok}};
    }
    r.measured[std::string(to_string(kind))] = std::move(fam);
  }
  r.tolerances["residual_max"] = kResidualMax;
  r.tolerances["truncation_K"] = g.vector_K;
  r.tolerances["ratio_slack"] = kRatioSlack;
  r.tolerances["round_off_floor"] = kFloor;
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_interval(const Grids& g) {
  CheckRecord r{10, "interior-eigenvalues",
                "one-center linear family: lambda2..lambda_{n-1} in (-2, 2); extreme "
                "eigenvectors have the expected sign pattern",
                CheckStatus::Fail};
  constexpr double kMargin = 1e-9;
  std::vector<std::pair<int, int>> cases;
  for (int n = g.interval_lo; n <= g.interval_hi; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) cases.emplace_back(n, ell);
  int interval_bad = 0;
  double max_interior = 0.0;
  std::vector<Json> exceptions(cases.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : interval_bad) reduction(max : max_interior)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto [n, ell] = cases[i];
    const auto gph = build_family(FamilyKind::OuterplanarLinear, n, ell);
    const auto rep = eigenvalues_sym(gph, {.vectors = false});
    for (int k = 1; k + 1 < n; ++k) {
      const double x = std::abs(rep.values[k]);
      max_interior = std::max(max_interior, x);
      if (x >= 2.0 - kMargin) ++interval_bad;
    }
    Json found = Json::array();
    for (auto which : {Extreme::Top, Extreme::Bottom}) {
      const auto p = extreme_sign_profile(gph, which);
      if (p.holds()) continue;
      Json entries = Json::array();
      for (int v : p.violations) entries.push_back(Json{{"vertex", v}, {"alpha", p.alpha[v]}});
      found.push_back(Json{{"n", n}, {"ell", ell},
                           {"which", which == Extreme::Top ? "top" : "bottom"},
                           {"lambda", p.lambda}, {"entries", std::move(entries)}});
    }
    exceptions[i] = std::move(found);
  }
  Json sign_exceptions = Json::array();
  for (auto& e : exceptions)
    for (auto& x : e) sign_exceptions.push_back(std::move(x));
  const auto sign_bad = sign_exceptions.size();
  r.measured["graphs"] = cases.size();
  r.measured["interval_violations"] = interval_bad;
  r.measured["sign_profile_violations"] = sign_bad;
  r.measured["sign_profile_exceptions"] = std::move(sign_exceptions);
  r.measured["max_abs_interior_eigenvalue"] = max_interior;
  r.tolerances["margin"] = kMargin;
  r.tolerances["sign_threshold"] = kSignThreshold;
  r.tolerances["n_range"] = Json::array({g.interval_lo, g.interval_hi});
  r.status = pass_if(interval_bad == 0 && sign_bad == 0);
  return r;
}

CheckRecord check_exhaustive(const Grids& g) {
  CheckRecord r{11, "exhaustive-small-n",
                "maximum spread over all outerplanar graphs on n vertices is at least the "
                "best one-center linear family value",
                CheckStatus::Fail};
  constexpr double kTol = 1e-9;
  bool ok = true;
  Json rows = Json::array();
  for (int n = 4; n <= g.exhaustive_hi; ++n) {
    const auto ex = exhaustive_max_spread(n, GraphClass::Outerplanar);
    double family = 0.0;
    int best_ell = 0;
    for (int ell = 1; ell <= n - 1; ++ell) {
      const double s = spread(build_family(FamilyKind::OuterplanarLinear, n, ell));
      if (s > family) {
        family = s;
        best_ell = ell;
      }
    }
    ok = ok && ex.max_spread >= family - kTol;
    Json row = Json::parse(to_json(ex));
    row["family_best_spread"] = family;
    row["family_best_ell"] = best_ell;
    row["family_attains_max"] = std::abs(ex.max_spread - family) <= kTol;
    rows.push_back(std::move(row));
  }
  r.measured["rows"] = std::move(rows);
  r.tolerances["absolute"] = kTol;
  r.status = pass_if(ok);
  return r;
}

CheckRecord check_walks(const Grids& g) {
  CheckRecord r{12, "walk-tables",
                "closed forms for 1'A_l^k 1 (k <= 5) equal exact counts for l >= 2k+1, and "
                "the fitted lines are 2^k l + q_k",
                CheckStatus::Fail};
  int exceptions = 0, compared = 0;
  for (int k = 0; k <= 5; ++k)
    for (int l = 2 * k + 1; l <= g.walk_hi; ++l) {
      ++compared;
      if (total_walks_closed(l, k) != total_walks_exact(l, k)) ++exceptions;
    }
  const long expected[][2] = {{2, -2}, {4, -6}, {8, -16}, {16, -38}, {32, -88}};
  bool fits = true;
  Json table = Json::array();
  for (int k = 1; k <= 5; ++k) {
    const auto c = fit_linear_walk_coeffs(k);
    fits = fits && c.p == expected[k - 1][0] && c.q == expected[k - 1][1];
    table.push_back(Json{{"k", k}, {"p", c.p.get_str()}, {"q", c.q.get_str()},
                         {"threshold", c.threshold}});
  }
  r.measured["compared"] = compared;
  r.measured["exceptions"] = exceptions;
  r.measured["fits"] = std::move(table);
  r.tolerances["comparison"] = "exact integer equality";
  r.status = pass_if(exceptions == 0 && fits);
  return r;
}

}  // namespace

CheckRecord run_check(int id, const VerifyOptions& options) {
  const auto g = grids(options.fast);
  switch (id) {
    case 1: return check_coefficients(g);
    case 2: return check_c6(g);
    case 3: return check_convergence(g);
    case 4: return check_argmax(g);
    case 5: return check_merge(g, options.seed);
    case 6: return check_closed_forms(g);
    case 7: return check_join(g, options.seed);
    case 8: return check_ranking(g);
    case 9: return check_vector_series(g);
    case 10: return check_interval(g);
    case 11: return check_exhaustive(g);
    case 12: return check_walks(g);
    default: throw std::invalid_argument("run_check: unknown check " + std::to_string(id));
  }
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const auto& c) { return c.status == CheckStatus::Pass; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const auto& c) { return c.status == CheckStatus::Fail; }));
}

int VerificationReport::reported() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Reported; }));
}

VerificationReport verify_suite(const VerifyOptions& options) {
  VerificationReport rep;
  rep.options = options;
  for (int id = 1; id <= kCheckCount; ++id) rep.checks.push_back(run_check(id, options));
  return rep;
}

Json verify_environment(const VerifyOptions& options) {
  const auto g = grids(options.fast);
  Json env = Json::object();
  env["fast"] = options.fast;
  env["seed"] = options.seed;
  env["series_order"] = kSeriesOrder;
  env["convergence_n"] = g.convergence_n;
  env["argmax_n"] = Json::array({g.argmax_lo, g.argmax_hi});
  env["merge_n"] = g.merge_n;
  env["merge_trials"] = g.merge_trials;
  env["closed_form_n"] = g.closed_n;
  env["join_instances"] = g.join_instances;
  env["ranking_n"] = g.ranking_n;
  env["eigenvector_n"] = g.vector_n;
  env["interval_n"] = Json::array({g.interval_lo, g.interval_hi});
  env["exhaustive_n"] = Json::array({4, g.exhaustive_hi});
  env["threads"] = omp_get_max_threads();
  return env;
}

std::string to_json(const VerificationReport& rep) {
  Json j = Json::object();
  j["suite_version"] = rep.suite_version;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"name", c.name},
                          {"claim", c.claim},
                          {"status", std::string(to_string(c.status))},
                          {"measured", c.measured},
                          {"tolerances", c.tolerances}});
  }
  j["checks"] = std::move(checks);
  j["summary"] = Json{{"pass", rep.passed()}, {"fail", rep.failed()}, {"reported", rep.reported()}};
  j["environment"] = verify_environment(rep.options);
  return dump_json(j);
}

}  // namespace maxspread
