#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxspread {

using Edge = std::pair<int, int>;

/// Undirected simple graph stored as a dense symmetric 0/1 adjacency matrix.
/// Values are immutable once built; every constructor below returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices from an edge list. Rejects loops,
  /// out-of-range endpoints and repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return m_; }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Row-major n*n adjacency entries.
  std::span<const std::uint8_t> adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
};

enum class BasicKind { Path, Cycle, Empty, Complete, CompleteBipartite };

/// Standard constructions. `sizes` holds one size, or two for the complete
/// bipartite graph. Paths are numbered along the path; cycles close v_{k-1}v_0.
Graph build_basic(BasicKind kind, std::span<const int> sizes);

Graph path(int k);
Graph cycle(int k);
Graph empty(int k);
Graph complete(int k);
Graph complete_bipartite(int a, int b);

/// G v H: all edges between the parts; G's vertices come first.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union with G's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Ordered path lengths l_1, ..., l_r (in vertices) of a linear forest.
struct LinearForestSpec {
  std::vector<int> parts;

  int vertex_count() const;
  std::size_t edge_count() const;
  int nontrivial_parts() const;
  bool operator==(const LinearForestSpec&) const = default;
};

/// P_{l_1} u ... u P_{l_r}, parts laid out consecutively in the given order.
Graph linear_forest(const LinearForestSpec& spec);

}  // namespace maxspread
