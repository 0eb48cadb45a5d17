#include "maxspread/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "maxspread/report.hpp"

namespace maxspread {

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.n());
  const auto adj = g.adjacency();
  for (std::size_t i = 0; i < adj.size(); ++i) a.a[i] = adj[i];
  return a;
}

namespace {

double residual_inf(const SymmetricMatrix& a, const std::vector<double>& v, double lambda) {
  double worst = 0.0;
  for (int i = 0; i < a.n; ++i) {
    const double* row = &a.a[static_cast<std::size_t>(i) * a.n];
    double acc = 0.0;
    for (int j = 0; j < a.n; ++j) acc += row[j] * v[j];
    worst = std::max(worst, std::abs(acc - lambda * v[i]));
  }
  return worst;
}

struct Eigenpair {
  std::vector<double> vec;
  double residual = 0.0;
};

Eigenpair extreme_vector(const SymmetricMatrix& a, const HouseholderTridiagonal& t,
                         double lambda) {
  constexpr int kRefinementSteps = 2;
  constexpr int kExtraSteps = 3;
  const double bound = kResidualTolerance * (1.0 + std::abs(lambda));
  Eigenpair best;
  for (int steps = kRefinementSteps; steps <= kRefinementSteps + kExtraSteps; ++steps) {
    auto y = kernels::tridiagonal_inverse_iteration(t.diag, t.offdiag, lambda, steps);
    auto v = kernels::back_transform(t, y);
    const double r = residual_inf(a, v, lambda);
    if (best.vec.empty() || r < best.residual) best = {std::move(v), r};
    if (best.residual <= bound) return best;
  }
  throw ConvergenceError("inverse iteration: residual " + std::to_string(best.residual) +
                         " exceeds " + std::to_string(bound) + " for eigenvalue " +
                         std::to_string(lambda));
}

void orient_by_sum(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  if (s < 0.0) {
    for (double& x : v) x = -x;
  }
}

void orient_by_largest(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best]) + 1e-14) best = i;
  if (!v.empty() && v[best] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

EigenReport eigen_symmetric(const SymmetricMatrix& a, const EigenOptions& options) {
  if (a.n < 1) throw std::invalid_argument("eigen_symmetric: matrix must be non-empty");
  EigenReport report;
  auto t = kernels::tridiagonalize(a, options.policy, options.vectors);
  report.values = kernels::tridiagonal_eigenvalues(t.diag, t.offdiag);
  std::sort(report.values.begin(), report.values.end(), std::greater<>());
  if (!options.vectors) return report;

  auto top = extreme_vector(a, t, report.values.front());
  auto bottom = extreme_vector(a, t, report.values.back());
  report.vec_top = std::move(top.vec);
  report.residual_top = top.residual;
  report.vec_bottom = std::move(bottom.vec);
  report.residual_bottom = bottom.residual;
  orient_by_sum(report.vec_top);
  orient_by_largest(report.vec_bottom);
  return report;
}

EigenReport eigenvalues_sym(const Graph& g, const EigenOptions& options) {
  if (g.n() < 1) throw std::invalid_argument("eigenvalues_sym: graph must have a vertex");
  return eigen_symmetric(adjacency_matrix(g), options);
}

double spread(const Graph& g) {
  return eigenvalues_sym(g, {.vectors = false}).spread();
}

std::vector<double> join_regular_spectrum(const RegularJoinInput& in) {
  if (in.m < 0 || in.n < 0 || static_cast<int>(in.spec_g.size()) != in.m ||
      static_cast<int>(in.spec_h.size()) != in.n) {
    throw std::invalid_argument("join_regular_spectrum: spectrum lengths must equal part sizes");
  }
  constexpr double kTol = 1e-9;
  if (in.m > 0 && std::abs(in.spec_g[0] - in.k) > kTol) {
    throw std::invalid_argument("join_regular_spectrum: spec_g[0] differs from degree k");
  }
  if (in.n > 0 && std::abs(in.spec_h[0] - in.l) > kTol) {
    throw std::invalid_argument("join_regular_spectrum: spec_h[0] differs from degree l");
  }
  if (in.m == 0) return in.spec_h;
  if (in.n == 0) return in.spec_g;

  std::vector<double> out(in.spec_g.begin() + 1, in.spec_g.end());
  out.insert(out.end(), in.spec_h.begin() + 1, in.spec_h.end());
  const double sum = in.k + in.l;
  const double disc = std::sqrt(static_cast<double>(in.k - in.l) * (in.k - in.l) +
                                4.0 * static_cast<double>(in.m) * in.n);
  out.push_back(0.5 * (sum + disc));
  out.push_back(0.5 * (sum - disc));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SignProfile extreme_sign_profile(const Graph& g, Extreme which, int center) {
  if (center < 0 || center >= g.n()) throw std::invalid_argument("sign profile: bad center");
  const auto report = eigenvalues_sym(g);
  SignProfile out;
  const bool top = which == Extreme::Top;
  out.lambda = top ? report.lambda1() : report.lambdan();
  if (top ? out.lambda < 2.0 : out.lambda > -2.0) {
    throw std::invalid_argument("sign profile: requires |lambda| >= 2, got " +
                                std::to_string(out.lambda));
  }
  const auto& v = top ? report.vec_top : report.vec_bottom;
  if (std::abs(v[center]) <= 1e-8) {
    throw std::invalid_argument("sign profile: eigenvector vanishes at the center");
  }
  out.alpha.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.alpha[i] = v[i] / v[center];
  for (int i = 0; i < g.n(); ++i) {
    const double x = out.alpha[i];
    const bool ok = top || i == center ? x > kSignThreshold : x < -kSignThreshold;
    if (!ok) out.violations.push_back(i);
  }
  return out;
}

std::string to_json(const EigenReport& r) {
  Json j = Json::object();
  j["values"] = r.values;
  j["lambda1"] = r.lambda1();
  j["lambdan"] = r.lambdan();
  j["spread"] = r.spread();
  Json res = Json::object();
  res["top"] = r.residual_top;
  res["bottom"] = r.residual_bottom;
  j["residuals"] = res;
  return dump_json(j);
}

}  // namespace maxspread
