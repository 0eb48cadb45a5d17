#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "maxspread/families.hpp"
#include "maxspread/kernels.hpp"
#include "maxspread/spectra.hpp"
#include "oracles.hpp"

using namespace maxspread;
using doctest::Approx;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<> g;
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set_symmetric(i, j, g(rng));
  return a;
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("small spectra") {
  auto p2 = eigenvalues_sym(path(2));
  CHECK(p2.values.size() == 2);
  CHECK(p2.values[0] == Approx(1.0));
  CHECK(p2.values[1] == Approx(-1.0));
  CHECK(spread(path(2)) == Approx(2.0));

  auto c4 = eigenvalues_sym(cycle(4));
  CHECK(c4.values[0] == Approx(2.0));
  CHECK(std::abs(c4.values[1]) < 1e-12);
  CHECK(std::abs(c4.values[2]) < 1e-12);
  CHECK(c4.values[3] == Approx(-2.0));

  auto kb = eigenvalues_sym(complete_bipartite(2, 4));
  CHECK(kb.lambda1() == Approx(2.0 * std::sqrt(2.0)));
  CHECK(kb.lambdan() == Approx(-2.0 * std::sqrt(2.0)));
  for (int i = 1; i <= 4; ++i) CHECK(std::abs(kb.values[i]) < 1e-12);
  CHECK(spread(complete_bipartite(2, 4)) == Approx(4.0 * std::sqrt(2.0)));

  CHECK(spread(join(empty(2), cycle(8))) == Approx(std::sqrt(68.0)));
  CHECK(spread(join(empty(2), cycle(8))) == Approx(8.246211).epsilon(1e-6));
}

TEST_CASE("path and complete graph closed forms") {
  for (int n : {3, 10, 57}) {
    auto r = eigenvalues_sym(path(n), {.vectors = false});
    for (int k = 1; k <= n; ++k)
      CHECK(std::abs(r.values[k - 1] - 2.0 * std::cos(k * std::numbers::pi / (n + 1))) < 1e-12);
  }
  auto k7 = eigenvalues_sym(complete(7));
  CHECK(k7.lambda1() == Approx(6.0));
  for (int i = 1; i < 7; ++i) CHECK(k7.values[i] == Approx(-1.0));
}

TEST_CASE("eigensolver against jacobi oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 30);
    Graph g = random_graph(n, 0.3, rng);
    auto r = eigenvalues_sym(g);
    CHECK(max_diff(r.values, oracle::jacobi_eigenvalues(g)) < 1e-10);
  }
  for (int n : {5, 40}) {
    auto a = random_symmetric(n, rng);
    auto r = eigen_symmetric(a);
    CHECK(max_diff(r.values, oracle::jacobi_eigenvalues(a.a, n)) < 1e-10);
  }
}

TEST_CASE("trace and power sum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + static_cast<int>(rng() % 120);
    Graph g = random_graph(n, 0.2, rng);
    auto r = eigenvalues_sym(g, {.vectors = false});
    double tr = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    double sq = 0.0;
    for (double x : r.values) sq += x * x;
    CHECK(std::abs(tr) <= 1e-8 * n);
    CHECK(std::abs(sq - 2.0 * static_cast<double>(g.m())) <= 1e-6 * std::max<double>(1, g.m()));
  }
}

TEST_CASE("extreme eigenvectors") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(30, 0.25, rng);
    auto r = eigenvalues_sym(g);
    CHECK(r.residual_top <= kResidualTolerance * (1 + std::abs(r.lambda1())));
    CHECK(r.residual_bottom <= kResidualTolerance * (1 + std::abs(r.lambdan())));
    double sum = 0.0, norm = 0.0;
    for (double x : r.vec_top) {
      sum += x;
      norm += x * x;
    }
    CHECK(sum > 0.0);
    CHECK(norm == Approx(1.0));
  }
}

TEST_CASE("serial and parallel tridiagonalization agree") {
  std::mt19937_64 rng(29);
  for (int n : {3, 17, 100, 150}) {
    auto a = random_symmetric(n, rng);
    auto s = kernels::reference::tridiagonalize(a);
    auto p = kernels::tridiagonalize_parallel(a);
    CHECK(max_diff(s.diag, p.diag) < 1e-10);
    for (std::size_t i = 0; i < s.offdiag.size(); ++i)
      CHECK(std::abs(std::abs(s.offdiag[i]) - std::abs(p.offdiag[i])) < 1e-10);
    auto ev = sorted_desc(kernels::tridiagonal_eigenvalues(p.diag, p.offdiag));
    CHECK(max_diff(ev, oracle::jacobi_eigenvalues(a.a, n)) < 1e-9);

    // Q e_0 round trip through the stored reflectors.
    std::vector<double> y(n, 0.0);
    y[0] = 1.0;
    auto q0 = kernels::back_transform(p, y);
    double nrm = 0.0;
    for (double x : q0) nrm += x * x;
    CHECK(nrm == Approx(1.0));
  }
}

TEST_CASE("policies give the same spectrum") {
  std::mt19937_64 rng(31);
  auto a = random_symmetric(120, rng);
  auto s = eigen_symmetric(a, {.vectors = false, .policy = KernelPolicy::Serial});
  auto p = eigen_symmetric(a, {.vectors = false, .policy = KernelPolicy::Parallel});
  CHECK(max_diff(s.values, p.values) < 1e-10);
}

TEST_CASE("degenerate joins converge") {
  for (int a = 1; a <= 30; a += 7)
    for (int b = 1; b <= 30; b += 5) {
      auto r = eigenvalues_sym(join(empty(a), empty(b)), {.vectors = false});
      CHECK(r.lambda1() == Approx(std::sqrt(a * b)));
      CHECK(r.lambdan() == Approx(-std::sqrt(a * b)));
    }
}

TEST_CASE("join commutes spectrally") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.4, rng);
    Graph h = random_graph(1 + static_cast<int>(rng() % 8), 0.4, rng);
    auto a = eigenvalues_sym(join(g, h), {.vectors = false});
    auto b = eigenvalues_sym(join(h, g), {.vectors = false});
    CHECK(max_diff(a.values, b.values) < 1e-10);
  }
}

TEST_CASE("regular join spectrum") {
  auto roots = [](RegularJoinInput in) { return join_regular_spectrum(in); };

  RegularJoinInput w;
  w.k = 0, w.l = 2, w.m = 2, w.n = 8;
  w.spec_g = eigenvalues_sym(empty(2)).values;
  w.spec_h = eigenvalues_sym(cycle(8)).values;
  auto dw = roots(w);
  CHECK(dw.front() == Approx(1.0 + std::sqrt(17.0)));
  CHECK(dw.back() == Approx(1.0 - std::sqrt(17.0)));
  CHECK(max_diff(dw, eigenvalues_sym(join(empty(2), cycle(8))).values) < 1e-9);

  RegularJoinInput kk;
  kk.k = 0, kk.l = 0, kk.m = 1, kk.n = 1;
  kk.spec_g = {0.0};
  kk.spec_h = {0.0};
  auto r11 = roots(kk);
  CHECK(r11.size() == 2);
  CHECK(r11[0] == Approx(1.0));
  CHECK(r11[1] == Approx(-1.0));

  RegularJoinInput k2c;
  k2c.k = 1, k2c.l = 2, k2c.m = 2, k2c.n = 8;
  k2c.spec_g = {1.0, -1.0};
  k2c.spec_h = eigenvalues_sym(cycle(8)).values;
  auto r = roots(k2c);
  CHECK(r.front() == Approx((3.0 + std::sqrt(65.0)) / 2.0));
  CHECK(r.back() == Approx((3.0 - std::sqrt(65.0)) / 2.0));
}

TEST_CASE("sign profiles") {
  Graph g = build_family(FamilyKind::OuterplanarLinear, 10, 7);
  auto top = extreme_sign_profile(g, Extreme::Top);
  CHECK(top.holds());
  CHECK(top.alpha.size() == 10);
  for (double x : top.alpha) CHECK(x > 0.0);
  auto bottom = extreme_sign_profile(g, Extreme::Bottom);
  CHECK(bottom.holds());
  CHECK(bottom.alpha[0] == Approx(1.0));
  for (std::size_t i = 1; i < bottom.alpha.size(); ++i) CHECK(bottom.alpha[i] < 0.0);

  Graph star = join(complete(1), empty(9));
  auto sb = extreme_sign_profile(star, Extreme::Bottom);
  CHECK(sb.lambda == Approx(-3.0));
  for (std::size_t i = 1; i < 10; ++i) CHECK(sb.alpha[i] == Approx(-1.0 / 3.0));

  // K1 v P7: lambda_n = -2 exactly and every other path entry vanishes.
  auto edge = extreme_sign_profile(build_family(FamilyKind::OuterplanarLinear, 8, 7), Extreme::Bottom);
  CHECK(edge.lambda == Approx(-2.0));
  CHECK_FALSE(edge.holds());
  CHECK(edge.violations.size() == 3);
}

TEST_CASE("interior eigenvalues of outerplanar families") {
  for (int n = 8; n <= 40; n += 4)
    for (int ell = 1; ell <= n - 1; ell += 3) {
      auto r = eigenvalues_sym(build_family(FamilyKind::OuterplanarLinear, n, ell), {.vectors = false});
      CHECK(r.values[1] < 2.0);
      CHECK(r.values[n - 2] > -2.0);
    }
}

TEST_CASE("planar family top eigenvalue bound") {
  for (FamilyKind kind : {FamilyKind::PlanarFirstKind, FamilyKind::PlanarSecondKind})
    for (int n : {100, 180})
      for (int ell = 1; ell <= n - 2; ell += 17) {
        double l1 = family_extremes(kind, n, ell, ExtremeMethod::DenseQuotient).lambda1;
        CHECK(l1 <= 1.5 + std::sqrt(8.0 * n - 15.0) / 2.0 + 1e-9);
      }
}
