#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library beyond Graph accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "maxspread/graph.hpp"

namespace oracle {

// Cyclic Jacobi rotations on a dense symmetric matrix; eigenvalues descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

inline std::vector<double> jacobi_eigenvalues(const maxspread::Graph& g) {
  int n = g.n();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = g.adjacent(i, j) ? 1.0 : 0.0;
  return jacobi_eigenvalues(std::move(a), n);
}

// Walks of length k in P_l by depth-first enumeration from every start vertex.
inline std::int64_t path_walks_dfs(int l, int k) {
  std::function<std::int64_t(int, int)> go = [&](int v, int left) -> std::int64_t {
    if (left == 0) return 1;
    std::int64_t total = 0;
    if (v > 0) total += go(v - 1, left - 1);
    if (v + 1 < l) total += go(v + 1, left - 1);
    return total;
  };
  std::int64_t total = 0;
  for (int v = 0; v < l; ++v) total += go(v, k);
  return total;
}

// Sum of all entries of A^k for a graph, by repeated integer matvec.
inline std::int64_t total_walks(const maxspread::Graph& g, int k) {
  int n = g.n();
  std::vector<std::int64_t> x(n, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<std::int64_t> y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.adjacent(i, j)) y[i] += x[j];
    x = std::move(y);
  }
  std::int64_t s = 0;
  for (auto v : x) s += v;
  return s;
}

inline std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
