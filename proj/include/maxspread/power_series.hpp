#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxspread/ratpoly.hpp"

namespace maxspread {

/// Truncated power series sum_{i<=order} c_i x^i over a coefficient ring R.
/// R needs R(long), +, -, *, multiplication by mpq_class, is_zero() and ==.
/// Results of binary operations are exact through the smaller order.
template <class R>
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(int order) : c_(check_order(order) + 1) {}
  PowerSeries(std::vector<R> coeffs, int order) : c_(check_order(order) + 1) {
    if (coeffs.size() > c_.size()) throw std::invalid_argument("PowerSeries: more terms than order");
    std::move(coeffs.begin(), coeffs.end(), c_.begin());
  }
  static PowerSeries constant(const R& c, int order) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  R& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  R coeff(int i) const { return i >= 0 && i <= order() ? c_[i] : R{}; }
  PowerSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend order");
    return PowerSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1), order);
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend PowerSeries operator*(PowerSeries a, const mpq_class& s) {
    for (auto& x : a.c_) x = x * s;
    return a;
  }
  /// Multiplies by x^k, dropping terms beyond the order.
  PowerSeries shifted(int k) const {
    PowerSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    return order;
  }
  std::vector<R> c_;
};

namespace detail {
template <class R>
void require_unit_constant(const PowerSeries<R>& f, const char* what) {
  if (!(f[0] == R(1))) throw std::invalid_argument(std::string(what) + ": constant term must be 1");
}
}  // namespace detail

/// 1/f for f(0) = 1.
template <class R>
PowerSeries<R> reciprocal(const PowerSeries<R>& f) {
  detail::require_unit_constant(f, "reciprocal");
  PowerSeries<R> g(f.order());
  g[0] = R(1);
  for (int k = 1; k <= f.order(); ++k) {
    R acc;
    for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = -acc;
  }
  return g;
}

/// f^alpha for f(0) = 1 and rational alpha, from the recurrence
/// k g_k = sum_{j=1..k} ((alpha+1) j - k) f_j g_{k-j}.
template <class R>
PowerSeries<R> power(const PowerSeries<R>& f, const mpq_class& alpha) {
  detail::require_unit_constant(f, "power");
  PowerSeries<R> g(f.order());
  g[0] = R(1);
  for (int k = 1; k <= f.order(); ++k) {
    R acc;
    for (int j = 1; j <= k; ++j) {
      if (f[j].is_zero()) continue;
      const mpq_class w = (alpha + 1) * j - k;
      if (w == 0) continue;
      acc += (f[j] * g[k - j]) * w;
    }
    g[k] = acc * mpq_class(1, k);
  }
  return g;
}

/// sqrt(f) for f(0) = 1 by the binomial series sum_k binom(1/2, k) (f - 1)^k.
template <class R>
PowerSeries<R> sqrt_series(const PowerSeries<R>& f) {
  detail::require_unit_constant(f, "sqrt_series");
  PowerSeries<R> h = f;
  h[0] = R{};
  PowerSeries<R> out = PowerSeries<R>::constant(R(1), f.order());
  PowerSeries<R> hk = out;
  mpq_class binom = 1;
  const mpq_class half(1, 2);
  for (int k = 1; k <= f.order(); ++k) {
    binom *= (half - (k - 1));
    binom /= k;
    hk = hk * h;
    out = out + hk * binom;
  }
  return out;
}

/// f(g(x)) for g(0) = 0, by Horner's rule.
template <class R>
PowerSeries<R> compose(const PowerSeries<R>& f, const PowerSeries<R>& g) {
  if (!g[0].is_zero()) throw std::invalid_argument("compose: inner series must vanish at 0");
  const int order = std::min(f.order(), g.order());
  PowerSeries<R> acc = PowerSeries<R>::constant(f[order], order);
  const auto inner = g.truncated(order);
  for (int i = order - 1; i >= 0; --i) {
    acc = acc * inner;
    acc[0] += f[i];
  }
  return acc;
}

/// Compositional inverse of z = x / phi(x): x = sum_{n=1..K} d_n z^n with
/// d_n = (1/n) [x^{n-1}] phi(x)^n. Returns d_0..d_K (d_0 = 0).
template <class R>
std::vector<R> lagrange_burmann_inverse(const PowerSeries<R>& phi, int K) {
  if (K < 1) throw std::invalid_argument("lagrange_burmann_inverse: K must be >= 1");
  detail::require_unit_constant(phi, "lagrange_burmann_inverse");
  if (phi.order() < K - 1) {
    throw std::invalid_argument("lagrange_burmann_inverse: phi known to order " +
                                std::to_string(phi.order()) + ", need " + std::to_string(K - 1));
  }
  const auto base = phi.truncated(K - 1);
  std::vector<R> d(static_cast<std::size_t>(K) + 1);
  PowerSeries<R> pw = PowerSeries<R>::constant(R(1), K - 1);
  for (int n = 1; n <= K; ++n) {
    pw = pw * base;
    d[n] = pw[n - 1] * mpq_class(1, n);
  }
  return d;
}

}  // namespace maxspread
