#include <cmath>
#include <random>

#include "doctest.h"
#include "maxspread/families.hpp"
#include "maxspread/minor.hpp"
#include "maxspread/series.hpp"
#include "maxspread/spectra.hpp"
#include "oracles.hpp"

using namespace maxspread;
using doctest::Approx;

TEST_CASE("family kinds") {
  CHECK(parse_family_kind("outerplanar") == FamilyKind::OuterplanarLinear);
  CHECK(parse_family_kind("planar") == FamilyKind::PlanarFirstKind);
  CHECK(parse_family_kind("planar-second") == FamilyKind::PlanarSecondKind);
  CHECK(parse_family_kind("double-wheel") == FamilyKind::DoubleWheel);
  CHECK_FALSE(parse_family_kind("wheel"));
  for (auto k : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind,
                 FamilyKind::PlanarSecondKind, FamilyKind::DoubleWheel})
    CHECK(parse_family_kind(to_string(k)) == k);
  CHECK(predicted_ell(FamilyKind::OuterplanarLinear, 100) == 67);
  CHECK(predicted_ell(FamilyKind::PlanarFirstKind, 100) == 66);
  CHECK(max_ell(FamilyKind::PlanarSecondKind, 10) == 8);
}

TEST_CASE("family construction") {
  Graph g = build_family(FamilyKind::OuterplanarLinear, 10, 7);
  CHECK(g.n() == 10);
  CHECK(g.m() == 15);
  CHECK(g.degree(0) == 9);
  CHECK(build_family(FamilyKind::DoubleWheel, 10).m() == 24);
  CHECK(build_family(FamilyKind::PlanarSecondKind, 10, 5).m() == 21);
  CHECK(build_family(FamilyKind::PlanarFirstKind, 10, 5).m() == 20);
  CHECK(build_family(FamilyKind::DoubleWheel, 10) == join(empty(2), cycle(8)));
  CHECK(build_family(FamilyKind::PlanarSecondKind, 9, 7) == join(complete(2), path(7)));

  CHECK_THROWS(build_family(FamilyKind::OuterplanarLinear, 10));
  CHECK_THROWS(build_family(FamilyKind::DoubleWheel, 10, 3));
  CHECK_THROWS(build_family(FamilyKind::OuterplanarLinear, 10, 10));
  CHECK_THROWS(build_family(FamilyKind::OuterplanarLinear, 3, 1));
}

TEST_CASE("families lie in their class") {
  for (int n = 5; n <= 10; ++n) {
    for (int ell = 1; ell <= n - 1; ++ell)
      CHECK(classify(build_family(FamilyKind::OuterplanarLinear, n, ell)).is_outerplanar);
    for (auto kind : {FamilyKind::PlanarFirstKind, FamilyKind::PlanarSecondKind})
      for (int ell = 1; ell <= n - 2; ++ell) {
        auto c = classify(build_family(kind, n, ell));
        CHECK(c.is_planar);
        CHECK_FALSE(c.is_outerplanar);
      }
    auto c = classify(build_family(FamilyKind::DoubleWheel, n));
    CHECK(c.is_planar);
    CHECK_FALSE(c.is_outerplanar);
  }
  for (int n : {50, 300}) {
    CHECK(build_family(FamilyKind::OuterplanarLinear, n, n - 1).m() <= static_cast<std::size_t>(2 * n - 3));
    CHECK(build_family(FamilyKind::PlanarSecondKind, n, n - 2).m() <= static_cast<std::size_t>(3 * n - 6));
    CHECK(build_family(FamilyKind::DoubleWheel, n).m() <= static_cast<std::size_t>(3 * n - 6));
  }
}

TEST_CASE("merge") {
  CHECK(merge({{3, 4}}) == LinearForestSpec{{6, 1}});
  CHECK(merge({{2, 2}}) == LinearForestSpec{{3, 1}});
  CHECK(merge({{1, 2, 5, 1, 5}}) == LinearForestSpec{{1, 2, 9, 1, 1}});
  CHECK_THROWS(merge({{4, 1, 1}}));
  for (int total = 3; total <= 20; ++total) {
    LinearForestSpec f{{total / 2, total - total / 2}};
    if (f.nontrivial_parts() < 2) continue;
    auto g = merge(f);
    CHECK(g.vertex_count() == f.vertex_count());
    CHECK(g.edge_count() == f.edge_count());
  }

  auto skipped = merge_trial(FamilyKind::OuterplanarLinear, {{6, 1, 1}});
  CHECK(skipped.outcome == MergeOutcome::Skipped);

  auto t = merge_trial(FamilyKind::PlanarFirstKind, {{3, 4, 2}});
  CHECK(t.outcome == MergeOutcome::Ok);
  CHECK(t.lambda1_after > t.lambda1_before);
  CHECK(t.lambdan_after < t.lambdan_before);
}

TEST_CASE("random compositions") {
  std::mt19937_64 rng(41);
  std::vector<int> count_parts(6, 0);
  for (int i = 0; i < 4000; ++i) {
    auto f = random_composition(5, rng);
    CHECK(f.vertex_count() == 5);
    for (int p : f.parts) CHECK(p >= 1);
    ++count_parts[f.parts.size()];
  }
  // 2^4 compositions; C(4, r-1) of them have r parts.
  for (int r = 1; r <= 5; ++r)
    CHECK(count_parts[r] / 4000.0 == Approx(oracle::binomial(4, r - 1) / 16.0).epsilon(0.25));
}

TEST_CASE("merge experiments") {
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind,
                    FamilyKind::PlanarSecondKind}) {
    auto ex = merge_monotonicity_experiment(kind, 100, 30, 1);
    CHECK(ex.violations == 0);
    CHECK(ex.trials == 100);
    CHECK(ex.min_margin_top > 0.0);
    CHECK(ex.min_margin_bottom > 0.0);
    auto again = merge_monotonicity_experiment(kind, 100, 30, 1);
    CHECK(again.min_margin_top == ex.min_margin_top);
  }
  CHECK_THROWS(merge_monotonicity_experiment(FamilyKind::DoubleWheel, 10, 30, 1));
}

TEST_CASE("extreme methods agree") {
  for (auto kind : {FamilyKind::OuterplanarLinear, FamilyKind::PlanarFirstKind,
                    FamilyKind::PlanarSecondKind})
    for (int n : {8, 13, 40, 90})
      for (int ell = 1; ell <= max_ell(kind, n); ell += (n > 20 ? 7 : 1)) {
        auto d = family_extremes(kind, n, ell, ExtremeMethod::DenseFull);
        auto q = family_extremes(kind, n, ell, ExtremeMethod::DenseQuotient);
        auto s = family_extremes(kind, n, ell, ExtremeMethod::Secular);
        CHECK(std::abs(d.lambda1 - q.lambda1) < 1e-10);
        CHECK(std::abs(d.lambdan - q.lambdan) < 1e-10);
        CHECK(std::abs(d.lambda1 - s.lambda1) < 1e-10);
        CHECK(std::abs(d.lambdan - s.lambdan) < 1e-10);
        auto j = oracle::jacobi_eigenvalues(build_family(kind, n, ell));
        CHECK(std::abs(d.lambda1 - j.front()) < 1e-9);
        CHECK(std::abs(d.lambdan - j.back()) < 1e-9);
      }
}

TEST_CASE("closed form spreads") {
  for (int n : {10, 50, 200}) {
    CHECK(spread(build_family(FamilyKind::DoubleWheel, n)) == Approx(std::sqrt(8.0 * n - 12.0)));
    CHECK(spread(complete_bipartite(2, n - 2)) == Approx(2.0 * std::sqrt(2.0 * n - 4.0)));
  }
}

TEST_CASE("eigenvector series residual") {
  auto r = eigenvector_series_residual(FamilyKind::OuterplanarLinear, 50, 33, Extreme::Top, 25);
  CHECK(r.residuals.size() == 26);
  CHECK(r.residuals[25] < 1e-6);
  CHECK(r.ell == 33);
  auto p = eigenvector_series_residual(FamilyKind::PlanarFirstKind, 50, 32, Extreme::Top, 25);
  CHECK(p.residuals[25] < 1e-6);
  for (int K = 0; K <= 25; ++K) CHECK(r.residuals[K] <= r.bound(K) + 1e-12);

  // K = 0 keeps the first term only: max |alpha(v_j) - 1/lambda|.
  Graph g = build_family(FamilyKind::OuterplanarLinear, 50, 33);
  auto prof = extreme_sign_profile(g, Extreme::Top);
  double m = 0.0;
  for (int j = 1; j <= 33; ++j) m = std::max(m, std::abs(prof.alpha[j] - 1.0 / prof.lambda));
  CHECK(r.residuals[0] == Approx(m).epsilon(1e-9));

  CHECK_THROWS(eigenvector_series_residual(FamilyKind::OuterplanarLinear, 50, 33, Extreme::Top, -1));
}

TEST_CASE("argmax scans") {
  auto r = scan_argmax(FamilyKind::OuterplanarLinear, 100);
  CHECK(r.predicted == 67);
  CHECK(r.argmax == std::vector<int>{67});
  CHECK(r.onset);
  CHECK(r.unimodal);
  CHECK(r.sign_changes == 1);
  CHECK(r.rows.size() == 99);

  auto p = scan_argmax(FamilyKind::PlanarFirstKind, 100);
  CHECK(p.predicted == 66);
  CHECK(p.argmax == std::vector<int>{66});

  auto dense = scan_argmax(FamilyKind::OuterplanarLinear, 60, {.method = ExtremeMethod::DenseFull});
  auto sec = scan_argmax(FamilyKind::OuterplanarLinear, 60);
  for (std::size_t i = 0; i < dense.rows.size(); ++i)
    CHECK(std::abs(dense.rows[i].spread - sec.rows[i].spread) < 1e-10);
  CHECK(dense.argmax == sec.argmax);

  std::string csv = to_csv(r);
  CHECK(csv.rfind("ell,lambda1,lambdan,spread,series_spread\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 100);
  CHECK(to_json(r).find("\"predicted_ell0\": 67") != std::string::npos);
}

TEST_CASE("planar candidate ranking") {
  auto c = compare_planar_candidates(200);
  CHECK(c.first_argmax == c.first_predicted);
  CHECK(c.first_best > c.second_best);
  CHECK(c.first_best > c.double_wheel);
  CHECK(c.double_wheel == Approx(c.double_wheel_closed));
  CHECK(c.first_strictly_largest);
}

TEST_CASE("exhaustive search") {
  auto one = exhaustive_max_spread(1, GraphClass::Outerplanar);
  CHECK(one.max_spread == 0.0);

  auto o4 = exhaustive_max_spread(4, GraphClass::Outerplanar);
  CHECK(o4.masks == 64);
  CHECK(o4.max_spread >= spread(build_family(FamilyKind::OuterplanarLinear, 4, 3)) - 1e-12);
  CHECK_FALSE(o4.witnesses.empty());
  for (const auto& w : o4.witnesses) {
    CHECK(classify(w).is_outerplanar);
    CHECK(spread(w) == Approx(o4.max_spread));
  }

  auto p5 = exhaustive_max_spread(5, GraphClass::Planar);
  CHECK(p5.max_spread >= 2.0 * std::sqrt(6.0) - 1e-12);
  for (const auto& w : p5.witnesses) CHECK(classify(w).is_planar);

  auto o6 = exhaustive_max_spread(6, GraphClass::Outerplanar);
  double best = 0.0;
  for (int ell = 1; ell <= 5; ++ell)
    best = std::max(best, spread(build_family(FamilyKind::OuterplanarLinear, 6, ell)));
  CHECK(o6.max_spread == Approx(best).epsilon(1e-12));
  for (const auto& w : o6.witnesses) CHECK(classify(w).is_outerplanar);

  CHECK(parse_graph_class("planar") == GraphClass::Planar);
  CHECK_FALSE(parse_graph_class("tree"));
  CHECK_THROWS(exhaustive_max_spread(8, GraphClass::Planar));
}
