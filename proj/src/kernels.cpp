#include "maxspread/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace maxspread::kernels {

namespace {

// Householder vector for x = A[k+1.., k]. A column whose tail is below
// `negligible` counts as reduced: beta = 0, offdiag = x[0], no reflector.
struct Reflector {
  double alpha = 0.0;
  double beta = 0.0;
};

Reflector make_reflector(std::span<double> x, double negligible) {
  double big = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) big = std::max(big, std::abs(x[i]));
  if (big <= negligible) return {x[0], 0.0};
  double tail = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) tail += x[i] * x[i];
  const double x0 = x[0];
  const double norm = std::sqrt(tail + x0 * x0);
  const double alpha = x0 >= 0.0 ? -norm : norm;
  x[0] = x0 - alpha;
  const double vtv = tail + x[0] * x[0];
  return {alpha, 2.0 / vtv};
}

// eps * max absolute row sum.
double negligible_entry(const SymmetricMatrix& a) {
  double norm = 0.0;
  for (int i = 0; i < a.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < a.n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  return std::numeric_limits<double>::epsilon() * norm;
}

void finish(HouseholderTridiagonal& t) {
  const int n = t.work.n;
  t.diag.resize(n);
  for (int i = 0; i < n; ++i) t.diag[i] = t.work(i, i);
  if (n >= 2) t.offdiag[n - 2] = t.work(n - 1, n - 2);
  if (!t.has_reflectors) t.work = SymmetricMatrix();
}

}  // namespace

namespace reference {

HouseholderTridiagonal tridiagonalize(SymmetricMatrix a, bool keep_reflectors) {
  const int n = a.n;
  HouseholderTridiagonal t;
  t.offdiag.assign(n > 1 ? n - 1 : 0, 0.0);
  t.betas.assign(n > 2 ? n - 2 : 0, 0.0);
  t.has_reflectors = keep_reflectors;
  std::vector<double> v(n), p(n);
  const double negligible = negligible_entry(a);

  for (int k = 0; k + 2 < n; ++k) {
    const int len = n - k - 1;
    for (int i = 0; i < len; ++i) v[i] = a(k + 1 + i, k);
    const Reflector r = make_reflector(std::span<double>(v.data(), len), negligible);
    t.offdiag[k] = r.alpha;
    t.betas[k] = r.beta;
    if (r.beta == 0.0) continue;

    // p = beta * B v on the lower triangle of the trailing block B.
    std::fill(p.begin(), p.begin() + len, 0.0);
    for (int i = 0; i < len; ++i) {
      const double* row = &a.a[static_cast<std::size_t>(k + 1 + i) * n + (k + 1)];
      double acc = 0.0;
      const double vi = v[i];
      for (int j = 0; j < i; ++j) {
        acc += row[j] * v[j];
        p[j] += row[j] * vi;
      }
      p[i] += acc + row[i] * vi;
    }
    double pv = 0.0;
    for (int i = 0; i < len; ++i) {
      p[i] *= r.beta;
      pv += p[i] * v[i];
    }
    const double kfac = 0.5 * r.beta * pv;
    for (int i = 0; i < len; ++i) p[i] -= kfac * v[i];  // p becomes w

    for (int i = 0; i < len; ++i) {
      double* row = &a.a[static_cast<std::size_t>(k + 1 + i) * n + (k + 1)];
      const double vi = v[i];
      const double wi = p[i];
      for (int j = 0; j <= i; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
    for (int i = 0; i < len; ++i) a(k + 1 + i, k) = v[i];
  }
  t.work = std::move(a);
  finish(t);
  return t;
}

}  // namespace reference

HouseholderTridiagonal tridiagonalize_parallel(SymmetricMatrix a, bool keep_reflectors) {
  const int n = a.n;
  HouseholderTridiagonal t;
  t.offdiag.assign(n > 1 ? n - 1 : 0, 0.0);
  t.betas.assign(n > 2 ? n - 2 : 0, 0.0);
  t.has_reflectors = keep_reflectors;
  std::vector<double> v(n), p(n);
  const double negligible = negligible_entry(a);

  for (int k = 0; k + 2 < n; ++k) {
    const int len = n - k - 1;
    for (int i = 0; i < len; ++i) v[i] = a(k + 1 + i, k);
    const Reflector r = make_reflector(std::span<double>(v.data(), len), negligible);
    t.offdiag[k] = r.alpha;
    t.betas[k] = r.beta;
    if (r.beta == 0.0) continue;

    double pv = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : pv)
    for (int i = 0; i < len; ++i) {
      const double* row = &a.a[static_cast<std::size_t>(k + 1 + i) * n + (k + 1)];
      double acc = 0.0;
      for (int j = 0; j < len; ++j) acc += row[j] * v[j];
      p[i] = r.beta * acc;
      pv += p[i] * v[i];
    }
    const double kfac = 0.5 * r.beta * pv;
    for (int i = 0; i < len; ++i) p[i] -= kfac * v[i];

#pragma omp parallel for schedule(static)
    for (int i = 0; i < len; ++i) {
      double* row = &a.a[static_cast<std::size_t>(k + 1 + i) * n + (k + 1)];
      const double vi = v[i];
      const double wi = p[i];
      for (int j = 0; j < len; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
    for (int i = 0; i < len; ++i) a(k + 1 + i, k) = v[i];
  }
  t.work = std::move(a);
  finish(t);
  return t;
}

HouseholderTridiagonal tridiagonalize(SymmetricMatrix a, KernelPolicy policy,
                                      bool keep_reflectors) {
  bool parallel = false;
  switch (policy) {
    case KernelPolicy::Serial:
      break;
    case KernelPolicy::Parallel:
      parallel = true;
      break;
    case KernelPolicy::Auto:
      parallel = a.n >= kParallelThreshold && omp_get_max_threads() > 1 && !omp_in_parallel();
      break;
  }
  return parallel ? tridiagonalize_parallel(std::move(a), keep_reflectors)
                  : reference::tridiagonalize(std::move(a), keep_reflectors);
}

std::vector<double> back_transform(const HouseholderTridiagonal& t, std::span<const double> y) {
  if (!t.has_reflectors) throw std::logic_error("back_transform: reflectors were not kept");
  const int n = static_cast<int>(y.size());
  std::vector<double> x(y.begin(), y.end());
  for (int k = n - 3; k >= 0; --k) {
    const double beta = t.betas[k];
    if (beta == 0.0) continue;
    double s = 0.0;
    for (int i = k + 1; i < n; ++i) s += t.work(i, k) * x[i];
    s *= beta;
    for (int i = k + 1; i < n; ++i) x[i] -= s * t.work(i, k);
  }
  return x;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return d;
  e.resize(n, 0.0);  // e[n-1] = 0 sentinel
  const long long cap = 100LL * n;
  long long sweeps = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  // Off-diagonals below eps * ||T|| are negligible; a purely relative test
  // stalls on clusters of near-zero diagonal entries.
  double norm = 0.0;
  for (int i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
  const double floor = eps * norm;

  for (int l = 0; l < n; ++l) {
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor) break;
      }
      if (m == l) break;
      if (++sweeps > cap) {
        throw ConvergenceError("tridiagonal QL: no convergence after " + std::to_string(cap) +
                               " sweeps");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

std::vector<double> tridiagonal_inverse_iteration(std::span<const double> diag,
                                                  std::span<const double> offdiag, double shift,
                                                  int steps) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (n == 1) return {1.0};

  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    scale = std::max(scale, row);
  }
  const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

  // LU of (T - shift I) with partial pivoting, second superdiagonal in du2.
  std::vector<double> dl(offdiag.begin(), offdiag.end());
  std::vector<double> du(offdiag.begin(), offdiag.end());
  std::vector<double> dd(n), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<char> swapped(n - 1, 0);
  for (int i = 0; i < n; ++i) dd[i] = diag[i] - shift;
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(dd[i]) >= std::abs(dl[i])) {
      if (dd[i] == 0.0) dd[i] = tiny;
      const double fact = dl[i] / dd[i];
      dl[i] = fact;
      dd[i + 1] -= fact * du[i];
    } else {
      const double fact = dd[i] / dl[i];
      dd[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = dd[i + 1];
      dd[i + 1] = temp - fact * dd[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      swapped[i] = 1;
    }
  }
  if (dd[n - 1] == 0.0) dd[n - 1] = tiny;
  for (int i = 0; i < n; ++i) {
    if (std::abs(dd[i]) < tiny) dd[i] = std::copysign(tiny, dd[i] == 0.0 ? 1.0 : dd[i]);
  }

  auto solve = [&](std::vector<double>& b) {
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        std::swap(b[i], b[i + 1]);
      }
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= dd[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / dd[n - 2];
    for (int i = n - 3; i >= 0; --i) {
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / dd[i];
    }
  };
  auto normalize = [](std::vector<double>& b) {
    double s = 0.0;
    for (double x : b) s += x * x;
    s = std::sqrt(s);
    for (double& x : b) x /= s;
  };

  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(1.0 + 0.7 * i);
  normalize(x);
  for (int s = 0; s < steps; ++s) {
    solve(x);
    normalize(x);
  }
  return x;
}

}  // namespace maxspread::kernels
