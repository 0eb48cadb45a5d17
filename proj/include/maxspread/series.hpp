#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maxspread/family_kind.hpp"
#include "maxspread/power_series.hpp"
#include "maxspread/ratpoly.hpp"
#include "maxspread/spectra.hpp"

namespace maxspread {

/// Truncated Laurent series eps^valuation * body(eps) in eps = N^(-1/2), with
/// RatPoly coefficients in mu. Known exactly through eps^top().
class EpsSeries {
 public:
  EpsSeries() = default;
  EpsSeries(int valuation, PowerSeries<RatPoly> body)
      : valuation_(valuation), body_(std::move(body)) {}

  int valuation() const { return valuation_; }
  int top() const { return valuation_ + body_.order(); }
  const PowerSeries<RatPoly>& body() const { return body_; }
  /// Coefficient of eps^e (zero below the valuation; throws above top()).
  RatPoly coeff(int e) const;

  friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  /// Requires a body with constant term 1.
  EpsSeries reciprocal() const;
  /// Requires an even valuation and a body with constant term 1.
  EpsSeries sqrt() const;

 private:
  int valuation_ = 0;
  PowerSeries<RatPoly> body_;
};

/// Coefficients of lambda^2 = N + s lambda + sum_i a_i / lambda^i with
/// a_i = p_i m + q_i. m is the shifted path parameter, mu = m / N.
struct ACoeffList {
  std::string N_label;
  std::string m_label;
  std::vector<std::pair<mpz_class, mpz_class>> entries;  // (p_i, q_i), i = 1, 2, ...
  int s = 0;
};

/// Families with an eigenvalue equation of the above shape.
/// Outerplanar: N = n-1, m = l-1, a_i = 1'A_l^i 1.
/// Planar first kind: N = 2(n-2), m = l-2, a_i = 2 * 1'A_l^i 1.
/// Planar second kind: as first kind with s = 1.
ACoeffList family_a_list(FamilyKind kind, int count);

/// c_1..c_K (index 0 holds c_1) of lambda = sqrt(N) + sum_i c_i N^{-(i-1)/2} by
/// order matching in L = lambda eps = 1 + sum c_i eps^i, where
///   L^2 = 1 + s eps L + sum_i (p_i mu eps^i + q_i eps^{i+2}) L^{-i}.
/// Verifies a zero residual through eps^K and deg c_i <= i; throws
/// std::logic_error otherwise. Needs at least K entries.
std::vector<RatPoly> solve_lambda_series(const ACoeffList& a, int K);

/// Same coefficients through Lagrange-Burmann inversion of
/// eps = x / phi(x), phi = (1 - s x - sum_i a_i x^{i+2})^{1/2}, x = 1/lambda, then a
/// series reciprocal. Independent of the order-matching route.
std::vector<RatPoly> solve_lambda_series_lb(const ACoeffList& a, int K);

/// lambda as an EpsSeries eps^{-1} (1 + sum c_i eps^i).
EpsSeries lambda_series(const std::vector<RatPoly>& c);

/// Coefficients of the negative root: (-1)^{i-1} c_i.
std::vector<RatPoly> lambda_minus_series(const std::vector<RatPoly>& c);

/// N and mu for a family at (n, l). Throws on l outside the family range.
struct SeriesPoint {
  double N = 0.0;
  double mu = 0.0;
};
SeriesPoint series_point(FamilyKind kind, int n, int ell);

/// +-sqrt(N) + sum_i (+-1)^{i-1} c_i(mu) N^{-(i-1)/2} in floating point.
double lambda_series_eval(const std::vector<RatPoly>& c, int n, int ell, FamilyKind kind,
                          Extreme which);

/// 2 sqrt(N) + sum_{even i} 2 c_i(mu) N^{-(i-1)/2}. Needs c_1..c_6.
double spread_series_eval(const std::vector<RatPoly>& c, int n, int ell, FamilyKind kind);

/// Printed coefficient tables, keyed by index i of c_i. Outerplanar in
/// mu = (l-1)/(n-1); both planar kinds in r = (l-2)/(n-2).
struct CoefficientTable {
  FamilyKind kind;
  std::string variable;
  std::map<int, RatPoly> c;
};
std::vector<CoefficientTable> printed_coefficient_tables();
const CoefficientTable& coefficient_table(FamilyKind kind);

/// Converts an engine coefficient (in mu = m/N) to the printed variable: the
/// identity for the outerplanar family, mu = r/2 for the planar kinds.
RatPoly to_printed_variable(FamilyKind kind, const RatPoly& engine);

struct CoeffComparison {
  int index = 0;
  RatPoly derived;  // printed variable
  bool has_printed = false;
  RatPoly printed;
  bool equal = false;
  RatPoly difference;  // derived - printed
};
struct CoeffReport {
  FamilyKind kind;
  int order = 0;
  std::vector<CoeffComparison> rows;
  bool lb_checked = false;
  bool lb_agrees = false;
  /// True iff every row with a printed counterpart through `through` matches.
  bool exact_match_through(int through) const;
};
/// Derives c_1..c_K with the true walk coefficients and compares against the
/// printed table. The Lagrange-Burmann cross-check runs for K <= lb_max_order.
CoeffReport compare_coefficients(FamilyKind kind, int K, int lb_max_order = 8);
std::string to_json(const CoeffReport& report);

}  // namespace maxspread
