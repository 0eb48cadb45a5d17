#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace maxspread {

/// Univariate polynomial with exact rational coefficients, lowest degree first,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(long c);  // NOLINT(google-explicit-constructor)
  RatPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static RatPoly from_coeffs(std::vector<mpq_class> coeffs);
  static RatPoly monomial(const mpq_class& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;
  /// p(f x).
  RatPoly rescale(const mpq_class& f) const;
  /// Human-readable form such as "-105/8*mu^4 + 35*mu^3 - 1".
  std::string to_string(std::string_view var = "mu") const;
  /// Coefficients as "num/den" strings (integers without a denominator).
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Finite Laurent polynomial in eps with RatPoly coefficients. Exact, no
/// truncation; used as the coefficient ring when series in a second variable
/// carry negative powers of eps.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const RatPoly& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly term(const RatPoly& c, int exponent);

  bool is_zero() const { return t_.empty(); }
  RatPoly coeff(int exponent) const;
  const std::map<int, RatPoly>& terms() const { return t_; }
  int low() const;
  int high() const;
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& s);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

 private:
  void add_term(int e, const RatPoly& c);
  std::map<int, RatPoly> t_;
};

}  // namespace maxspread
