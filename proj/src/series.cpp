#include "maxspread/series.hpp"

#include <cmath>
#include <stdexcept>

#include "maxspread/report.hpp"
#include "maxspread/walks.hpp"

namespace maxspread {

RatPoly EpsSeries::coeff(int e) const {
  if (e < valuation_) return {};
  if (e > top()) throw std::out_of_range("EpsSeries: eps^" + std::to_string(e) + " beyond order");
  return body_[e - valuation_];
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
  const int v = std::min(a.valuation_, b.valuation_);
  const int top = std::min(a.top(), b.top());
  if (top < v) throw std::invalid_argument("EpsSeries: sum has no known terms");
  PowerSeries<RatPoly> body(top - v);
  for (int e = v; e <= top; ++e) body[e - v] = a.coeff(e) + b.coeff(e);
  return {v, std::move(body)};
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  return {a.valuation_ + b.valuation_, a.body_ * b.body_};
}

EpsSeries EpsSeries::reciprocal() const { return {-valuation_, maxspread::reciprocal(body_)}; }

EpsSeries EpsSeries::sqrt() const {
  if (valuation_ % 2 != 0) throw std::invalid_argument("EpsSeries::sqrt: odd valuation");
  return {valuation_ / 2, sqrt_series(body_)};
}

ACoeffList family_a_list(FamilyKind kind, int count) {
  if (count < 1) throw std::invalid_argument("family_a_list: count must be positive");
  ACoeffList a;
  switch (kind) {
    case FamilyKind::OuterplanarLinear:
      a.N_label = "N = n-1";
      a.m_label = "m = l-1";
      break;
    case FamilyKind::PlanarFirstKind:
    case FamilyKind::PlanarSecondKind:
      a.N_label = "N = 2(n-2)";
      a.m_label = "m = l-2";
      a.s = center_edges(kind);
      break;
    case FamilyKind::DoubleWheel:
      throw std::invalid_argument("family_a_list: the double wheel has no path parameter");
  }
  const int c = center_count(kind);
  for (int i = 1; i <= count; ++i) {
    const auto w = fit_linear_walk_coeffs(i);
    // c * (p l + q) with l = m + c.
    a.entries.emplace_back(c * w.p, c * (w.q + c * w.p));
  }
  return a;
}

namespace {

void check_list(const ACoeffList& a, int K) {
  if (K < 1) throw std::invalid_argument("lambda series: order must be >= 1");
  if (static_cast<int>(a.entries.size()) < K) {
    throw std::invalid_argument("lambda series: c_" + std::to_string(K) + " needs a_1..a_" +
                                std::to_string(K) + ", got " + std::to_string(a.entries.size()));
  }
}

// L^2 - (1 + s eps L + sum_i (p_i mu eps^i + q_i eps^{i+2}) L^{-i}) through L's order.
PowerSeries<RatPoly> residual(const PowerSeries<RatPoly>& L, const ACoeffList& a) {
  const int K = L.order();
  auto rhs = PowerSeries<RatPoly>::constant(RatPoly(1), K);
  if (a.s != 0) rhs = rhs + L.shifted(1) * mpq_class(a.s);
  const auto inv = reciprocal(L);
  auto pw = PowerSeries<RatPoly>::constant(RatPoly(1), K);
  const int count = std::min<int>(K, static_cast<int>(a.entries.size()));
  for (int i = 1; i <= count; ++i) {
    pw = pw * inv;
    PowerSeries<RatPoly> t(K);
    t[i] = RatPoly::monomial(mpq_class(a.entries[i - 1].first), 1);
    if (i + 2 <= K) t[i + 2] = RatPoly(mpq_class(a.entries[i - 1].second));
    rhs = rhs + t * pw;
  }
  return L * L - rhs;
}

}  // namespace

std::vector<RatPoly> solve_lambda_series(const ACoeffList& a, int K) {
  check_list(a, K);
  PowerSeries<RatPoly> L(K);
  L[0] = RatPoly(1);
  for (int k = 1; k <= K; ++k) {
    const auto r = residual(L.truncated(k), a);
    L[k] = r[k] * mpq_class(-1, 2);
  }
  if (!residual(L, a).is_zero()) {
    throw std::logic_error("solve_lambda_series: non-zero residual after solving");
  }
  std::vector<RatPoly> c;
  for (int i = 1; i <= K; ++i) {
    if (L[i].degree() > i) {
      throw std::logic_error("solve_lambda_series: c_" + std::to_string(i) + " has degree " +
                             std::to_string(L[i].degree()));
    }
    c.push_back(L[i]);
  }
  return c;
}

std::vector<RatPoly> solve_lambda_series_lb(const ACoeffList& a, int K) {
  check_list(a, K);
  // Terms d_n eps^{n-1} with n > 3K+1 start above eps^K.
  const int terms = 3 * K + 1;
  const int D = terms - 1;
  PowerSeries<LaurentPoly> f(D);
  f[0] = LaurentPoly(1);
  if (D >= 1 && a.s != 0) f[1] = LaurentPoly(-a.s);
  for (int i = 1; i <= K && i + 2 <= D; ++i) {
    const auto& [p, q] = a.entries[i - 1];
    const LaurentPoly ai = LaurentPoly::term(RatPoly::monomial(mpq_class(p), 1), -2) +
                           LaurentPoly(RatPoly(mpq_class(q)));
    f[i + 2] = -ai;
  }
  const auto phi = sqrt_series(f);
  const auto d = lagrange_burmann_inverse(phi, terms);
  PowerSeries<RatPoly> S(K);
  for (int n = 1; n <= terms; ++n) {
    for (const auto& [e, c] : d[n].terms()) {
      const int total = e + n - 1;
      if (total < 0) throw std::logic_error("solve_lambda_series_lb: negative eps power");
      if (total <= K) S[total] += c;
    }
  }
  const auto L = reciprocal(S);
  std::vector<RatPoly> c;
  for (int i = 1; i <= K; ++i) c.push_back(L[i]);
  return c;
}

EpsSeries lambda_series(const std::vector<RatPoly>& c) {
  PowerSeries<RatPoly> body(static_cast<int>(c.size()));
  body[0] = RatPoly(1);
  for (std::size_t i = 0; i < c.size(); ++i) body[static_cast<int>(i) + 1] = c[i];
  return {-1, std::move(body)};
}

std::vector<RatPoly> lambda_minus_series(const std::vector<RatPoly>& c) {
  std::vector<RatPoly> out = c;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

SeriesPoint series_point(FamilyKind kind, int n, int ell) {
  if (!has_ell(kind)) throw std::invalid_argument("series_point: family has no path parameter");
  if (ell < min_ell(kind) || ell > max_ell(kind, n)) {
    throw std::invalid_argument("series_point: l=" + std::to_string(ell) + " outside [" +
                                std::to_string(min_ell(kind)) + ", " +
                                std::to_string(max_ell(kind, n)) + "]");
  }
  SeriesPoint p;
  if (center_count(kind) == 1) {
    p.N = n - 1.0;
    p.mu = (ell - 1.0) / p.N;
  } else {
    p.N = 2.0 * (n - 2);
    p.mu = (ell - 2.0) / p.N;
  }
  return p;
}

double lambda_series_eval(const std::vector<RatPoly>& c, int n, int ell, FamilyKind kind,
                          Extreme which) {
  const auto p = series_point(kind, n, ell);
  const double eps = 1.0 / std::sqrt(p.N);
  const bool top = which == Extreme::Top;
  double value = top ? std::sqrt(p.N) : -std::sqrt(p.N);
  double pw = 1.0;  // eps^{i-1}
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sign = top || k % 2 == 0 ? 1.0 : -1.0;
    value += sign * c[k].eval(p.mu) * pw;
    pw *= eps;
  }
  return value;
}

double spread_series_eval(const std::vector<RatPoly>& c, int n, int ell, FamilyKind kind) {
  if (c.size() < 6) throw std::invalid_argument("spread_series_eval: needs c_1..c_6");
  const auto p = series_point(kind, n, ell);
  const double eps = 1.0 / std::sqrt(p.N);
  double value = 2.0 * std::sqrt(p.N);
  for (std::size_t i = 2; i <= c.size(); i += 2) {
    value += 2.0 * c[i - 1].eval(p.mu) * std::pow(eps, static_cast<double>(i - 1));
  }
  return value;
}

namespace {

RatPoly poly(std::initializer_list<mpq_class> coeffs) {
  return RatPoly::from_coeffs(std::vector<mpq_class>(coeffs));
}

std::vector<CoefficientTable> build_tables() {
  using Q = mpq_class;
  CoefficientTable outer{FamilyKind::OuterplanarLinear, "mu = (l-1)/(n-1)", {}};
  outer.c[1] = poly({0, 1});
  outer.c[2] = poly({0, 2, Q(-3, 2)});
  outer.c[3] = poly({0, 4, -8, 4});
  outer.c[4] = poly({-1, 8, -30, 35, Q(-105, 8)});
  outer.c[5] = poly({-4, 20, -96, 192, -160, 48});
  outer.c[6] = poly({-11, 62, Q(-595, 2), 840, -1155, Q(3003, 4), Q(-3003, 16)});

  CoefficientTable first{FamilyKind::PlanarFirstKind, "r = (l-2)/(n-2)", {}};
  first.c[1] = poly({0, 1});
  first.c[2] = poly({0, 2, Q(-3, 2)});
  first.c[3] = poly({2, 4, -8, 4});
  first.c[4] = poly({2, 2, -30, 35, Q(-105, 8)});
  first.c[5] = poly({0, -8, -72, 192, -160, 48});
  first.c[6] = poly({-12, -28, -105, 735, -1155, Q(3003, 4), Q(-3003, 16)});

  CoefficientTable second{FamilyKind::PlanarSecondKind, "r = (l-2)/(n-2)", {}};
  second.c[2] = poly({Q(1, 8), Q(3, 2), Q(-3, 2)});
  return {outer, first, second};
}

}  // namespace

std::vector<CoefficientTable> printed_coefficient_tables() { return build_tables(); }

const CoefficientTable& coefficient_table(FamilyKind kind) {
  static const std::vector<CoefficientTable> tables = build_tables();
  for (const auto& t : tables)
    if (t.kind == kind) return t;
  throw std::invalid_argument("coefficient_table: no printed table for " +
                              std::string(to_string(kind)));
}

RatPoly to_printed_variable(FamilyKind kind, const RatPoly& engine) {
  return center_count(kind) == 1 ? engine : engine.rescale(mpq_class(1, 2));
}

bool CoeffReport::exact_match_through(int through) const {
  for (const auto& r : rows)
    if (r.index <= through && r.has_printed && !r.equal) return false;
  return true;
}

CoeffReport compare_coefficients(FamilyKind kind, int K, int lb_max_order) {
  const auto a = family_a_list(kind, K);
  const auto c = solve_lambda_series(a, K);
  const auto& table = coefficient_table(kind);
  CoeffReport report{kind, K, {}, false, false};
  for (int i = 1; i <= K; ++i) {
    CoeffComparison row;
    row.index = i;
    row.derived = to_printed_variable(kind, c[i - 1]);
    auto it = table.c.find(i);
    if (it != table.c.end()) {
      row.has_printed = true;
      row.printed = it->second;
      row.difference = row.derived - row.printed;
      row.equal = row.difference.is_zero();
    }
    report.rows.push_back(std::move(row));
  }
  if (K <= lb_max_order) {
    report.lb_checked = true;
    report.lb_agrees = solve_lambda_series_lb(a, K) == c;
  }
  return report;
}

std::string to_json(const CoeffReport& report) {
  const auto& table = coefficient_table(report.kind);
  const auto a = family_a_list(report.kind, 1);
  Json j = Json::object();
  j["family"] = std::string(to_string(report.kind));
  j["order"] = report.order;
  j["variable"] = table.variable;
  j["N"] = a.N_label;
  j["m"] = a.m_label;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row = Json::object();
    row["index"] = r.index;
    row["derived"] = r.derived.coeff_strings();
    row["derived_text"] = r.derived.to_string(center_count(report.kind) == 1 ? "mu" : "r");
    if (r.has_printed) {
      row["printed"] = r.printed.coeff_strings();
      row["match"] = r.equal;
      row["difference"] = r.difference.coeff_strings();
    } else {
      row["printed"] = nullptr;
      row["match"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  j["coefficients"] = std::move(rows);
  Json lb = Json::object();
  lb["checked"] = report.lb_checked;
  lb["agrees"] = report.lb_checked ? Json(report.lb_agrees) : Json(nullptr);
  j["lagrange_burmann"] = std::move(lb);
  const int through = std::min(report.order, 5);
  const bool match = report.exact_match_through(through);
  j["exact_match"] = match;
  j["summary"] = "c1..c" + std::to_string(through) + " exact match: " + (match ? "true" : "false");
  return dump_json(j);
}

}  // namespace maxspread
