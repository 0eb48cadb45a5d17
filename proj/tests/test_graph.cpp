#include <random>
#include <sstream>

#include "doctest.h"
#include "maxspread/graph.hpp"
#include "maxspread/graph_io.hpp"
#include "maxspread/minor.hpp"

using namespace maxspread;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("basic constructions") {
  CHECK(path(2).n() == 2);
  CHECK(path(2).m() == 1);
  CHECK(path(1).m() == 0);
  CHECK(cycle(5).m() == 5);
  CHECK(complete(6).m() == 15);
  CHECK(empty(4).m() == 0);

  Graph kb = complete_bipartite(2, 4);
  CHECK(kb.n() == 6);
  CHECK(kb.m() == 8);
  CHECK_FALSE(kb.adjacent(0, 1));
  CHECK(kb.adjacent(1, 5));

  CHECK_THROWS(cycle(2));
  CHECK_THROWS(path(-1));

  int two[] = {3, 3};
  CHECK(build_basic(BasicKind::CompleteBipartite, two) == complete_bipartite(3, 3));
}

TEST_CASE("from_edges rejects bad input") {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> out{{0, 3}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS(Graph::from_edges(3, loop));
  CHECK_THROWS(Graph::from_edges(3, out));
  CHECK_THROWS(Graph::from_edges(3, dup));
}

TEST_CASE("join and union") {
  Graph fan = join(complete(1), path(4));
  CHECK(fan.n() == 5);
  CHECK(fan.m() == 7);
  CHECK(fan.degree(0) == 4);

  Graph dw = join(empty(2), cycle(8));
  CHECK(dw.n() == 10);
  CHECK(dw.m() == 24);

  CHECK(join(empty(0), path(5)) == path(5));
  CHECK(disjoint_union(empty(0), cycle(4)) == cycle(4));

  Graph u = disjoint_union(path(3), path(1));
  CHECK(u.n() == 4);
  CHECK(u.m() == 2);

  Graph pp = disjoint_union(path(2), path(2));
  CHECK(pp.m() == 2);
  CHECK(pp.adjacent(0, 1));
  CHECK(pp.adjacent(2, 3));
  CHECK_FALSE(pp.adjacent(1, 2));
}

TEST_CASE("edge count formulas on random parts") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int a = static_cast<int>(rng() % 6), b = static_cast<int>(rng() % 6);
    Graph g = random_graph(a, 0.5, rng), h = random_graph(b, 0.5, rng);
    CHECK(join(g, h).m() == g.m() + h.m() + static_cast<std::size_t>(a * b));
    CHECK(disjoint_union(g, h).m() == g.m() + h.m());
    CHECK(join(g, h).n() == a + b);
  }
}

TEST_CASE("linear forests") {
  LinearForestSpec f{{3, 1, 4}};
  CHECK(f.vertex_count() == 8);
  CHECK(f.edge_count() == 5);
  CHECK(f.nontrivial_parts() == 2);
  Graph g = linear_forest(f);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(3, 4));
  CHECK(g.adjacent(6, 7));
}

TEST_CASE("minors") {
  auto k4 = MinorPattern::make(MinorName::K4);
  auto k5 = MinorPattern::make(MinorName::K5);
  auto k23 = MinorPattern::make(MinorName::K23);
  auto k33 = MinorPattern::make(MinorName::K33);

  CHECK(has_minor(complete(5), k5));
  CHECK(has_minor(complete_bipartite(2, 3), k23));
  CHECK_FALSE(has_minor(join(complete(1), path(4)), k4));
  CHECK(has_minor(join(complete(1), cycle(4)), k4));
  CHECK(has_minor(complete_bipartite(3, 3), k33));
  CHECK_FALSE(has_minor(cycle(7), k4));

  // Petersen graph: K5 and K3,3 minors.
  std::vector<Edge> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : pe)
    if (u > v) std::swap(u, v);
  Graph petersen = Graph::from_edges(10, pe);
  CHECK(has_minor(petersen, k5));
  CHECK(has_minor(petersen, k33));

  CHECK_THROWS_AS(has_minor(path(13), k4), std::invalid_argument);
}

TEST_CASE("classify") {
  auto c33 = classify(complete_bipartite(3, 3));
  CHECK_FALSE(c33.is_planar);
  auto c23 = classify(complete_bipartite(2, 3));
  CHECK(c23.is_planar);
  CHECK_FALSE(c23.is_outerplanar);
  auto fan = classify(join(complete(1), disjoint_union(path(5), empty(2))));
  CHECK(fan.is_outerplanar);
  CHECK(classify(complete(4)).is_planar);
  CHECK_FALSE(classify(complete(4)).is_outerplanar);
  CHECK_FALSE(classify(complete(5)).is_planar);
}

TEST_CASE("planarity invariants on random small graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    double p = 0.2 + 0.6 * std::uniform_real_distribution<>(0, 1)(rng);
    Graph g = random_graph(n, p, rng);
    auto c = classify(g);
    if (c.is_outerplanar) {
      CHECK(c.is_planar);
      CHECK(g.m() <= static_cast<std::size_t>(2 * n - 3));
    }
    if (c.is_planar) CHECK(g.m() <= static_cast<std::size_t>(3 * n - 6));
  }
}

TEST_CASE("minor monotone under edge addition") {
  std::mt19937_64 rng(9);
  auto k4 = MinorPattern::make(MinorName::K4);
  auto k23 = MinorPattern::make(MinorName::K23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = random_graph(n, 0.35, rng);
    bool a = has_minor(g, k4), b = has_minor(g, k23);
    auto edges = g.edges();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) {
          auto e2 = edges;
          e2.emplace_back(u, v);
          Graph h = Graph::from_edges(n, e2);
          if (a) CHECK(has_minor(h, k4));
          if (b) CHECK(has_minor(h, k23));
        }
  }
}

TEST_CASE("edge list and json io") {
  Graph g = join(complete(1), path(4));
  std::string text = to_edge_list(g);
  CHECK(text.rfind("5 7\n", 0) == 0);
  CHECK(parse_edge_list(text) == g);
  CHECK(parse_graph(text) == g);

  std::string js = to_graph_json(g);
  CHECK(js == R"({"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[2,3],[3,4]]})");
  CHECK(parse_graph_json(js) == g);
  CHECK(parse_graph("  " + js) == g);
  CHECK(to_graph_json(parse_graph_json(js)) == js);

  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n":2})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("{not json"), ParseError);
}
