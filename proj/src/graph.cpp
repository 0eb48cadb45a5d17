#include "maxspread/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maxspread {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    auto& uv = g.adj_[static_cast<std::size_t>(u) * n + v];
    if (uv != 0) {
      throw std::invalid_argument("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    uv = 1;
    g.adj_[static_cast<std::size_t>(v) * n + u] = 1;
    ++g.m_;
  }
  return g;
}

int Graph::degree(int v) const {
  auto row = adjacency().subspan(static_cast<std::size_t>(v) * n_, n_);
  return static_cast<int>(std::count(row.begin(), row.end(), std::uint8_t{1}));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

void require_size(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + ": size must be non-negative");
}

}  // namespace

Graph path(int k) {
  require_size(k, "path");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: size must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, k - 1);
  return Graph::from_edges(k, e);
}

Graph empty(int k) {
  require_size(k, "empty");
  return Graph::from_edges(k, {});
}

Graph complete(int k) {
  require_size(k, "complete");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, e);
}

Graph complete_bipartite(int a, int b) {
  require_size(a, "complete_bipartite");
  require_size(b, "complete_bipartite");
  return join(empty(a), empty(b));
}

Graph build_basic(BasicKind kind, std::span<const int> sizes) {
  const std::size_t want = kind == BasicKind::CompleteBipartite ? 2 : 1;
  if (sizes.size() != want) {
    throw std::invalid_argument("build_basic: expected " + std::to_string(want) + " size(s)");
  }
  switch (kind) {
    case BasicKind::Path:
      return path(sizes[0]);
    case BasicKind::Cycle:
      return cycle(sizes[0]);
    case BasicKind::Empty:
      return empty(sizes[0]);
    case BasicKind::Complete:
      return complete(sizes[0]);
    case BasicKind::CompleteBipartite:
      return complete_bipartite(sizes[0], sizes[1]);
  }
  throw std::invalid_argument("build_basic: unknown kind");
}

Graph join(const Graph& g, const Graph& h) {
  const int off = g.n();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) e.emplace_back(u, v + off);
  return Graph::from_edges(g.n() + h.n(), e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.n();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
  return Graph::from_edges(g.n() + h.n(), e);
}

int LinearForestSpec::vertex_count() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::size_t LinearForestSpec::edge_count() const {
  std::size_t m = 0;
  for (int p : parts) m += static_cast<std::size_t>(p - 1);
  return m;
}

int LinearForestSpec::nontrivial_parts() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p >= 2; }));
}

Graph linear_forest(const LinearForestSpec& spec) {
  std::vector<Edge> e;
  int base = 0;
  for (int p : spec.parts) {
    if (p < 1) throw std::invalid_argument("linear forest parts must be positive");
    for (int i = 0; i + 1 < p; ++i) e.emplace_back(base + i, base + i + 1);
    base += p;
  }
  return Graph::from_edges(base, e);
}

}  // namespace maxspread
