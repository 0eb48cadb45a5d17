#include "maxspread/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace maxspread {

namespace {

using Row = std::uint16_t;

// Graph on at most 12 vertices; bit j of rows[i] marks the edge ij.
struct SmallGraph {
  int n = 0;
  std::array<Row, kMinorVertexLimit> rows{};

  int degree(int v) const { return std::popcount(rows[v]); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
  }

  void remove_vertex(int v) {
    const Row low = static_cast<Row>((Row{1} << v) - 1);
    for (int i = 0; i < n; ++i) {
      const Row r = rows[i];
      rows[i] = static_cast<Row>((r & low) | ((r >> 1) & ~low));
    }
    for (int i = v; i + 1 < n; ++i) rows[i] = rows[i + 1];
    rows[n - 1] = 0;
    --n;
  }

  void add_edge(int a, int b) {
    rows[a] |= static_cast<Row>(Row{1} << b);
    rows[b] |= static_cast<Row>(Row{1} << a);
  }

  // Merge v into u, dropping the loop and parallel edges.
  void contract(int u, int v) {
    Row merged = static_cast<Row>((rows[u] | rows[v]) & ~(Row{1} << u) & ~(Row{1} << v));
    for (int w = 0; w < n; ++w) {
      if (merged & (Row{1} << w)) add_edge(u, w);
    }
    remove_vertex(v);
  }
};

struct PatternInfo {
  SmallGraph graph;
  int vertices = 0;
  int edges = 0;
  int min_degree = 0;
  std::vector<int> degrees_desc;
};

PatternInfo describe(const Graph& h) {
  PatternInfo info;
  info.vertices = h.n();
  info.edges = static_cast<int>(h.m());
  info.graph.n = h.n();
  for (auto [u, v] : h.edges()) info.graph.add_edge(u, v);
  info.min_degree = h.n();
  for (int v = 0; v < h.n(); ++v) {
    info.degrees_desc.push_back(h.degree(v));
    info.min_degree = std::min(info.min_degree, h.degree(v));
  }
  std::sort(info.degrees_desc.rbegin(), info.degrees_desc.rend());
  return info;
}

struct Key {
  int n;
  std::array<Row, kMinorVertexLimit> rows;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = static_cast<std::size_t>(k.n) * 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < k.n; ++i) h = (h ^ k.rows[i]) * 0x100000001b3ULL;
    return h;
  }
};

class MinorSearch {
 public:
  explicit MinorSearch(const PatternInfo& pattern) : h_(pattern) {}

  bool contains(SmallGraph g) {
    reduce(g);
    if (!large_enough(g)) return false;

    // The patterns are connected, so a model lives inside one component.
    const auto comp = components(g);
    if (comp.size() > 1) {
      for (Row mask : comp) {
        if (std::popcount(mask) < h_.vertices) continue;
        if (contains(restrict(g, mask))) return true;
      }
      return false;
    }

    if (g.n == h_.vertices) return spanning_subgraph(g);

    const Key key = normalize(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // g has more vertices than the pattern, so any model leaves a vertex
    // unused or has a branch set containing an edge.
    bool found = false;
    for (int u = 0; u < g.n && !found; ++u) {
      for (Row r = static_cast<Row>(g.rows[u] & ~((Row{2} << u) - 1)); r && !found;
           r &= static_cast<Row>(r - 1)) {
        SmallGraph contracted = g;
        contracted.contract(u, std::countr_zero(r));
        found = contains(contracted);
      }
    }
    for (int v = 0; v < g.n && !found; ++v) {
      SmallGraph deleted = g;
      deleted.remove_vertex(v);
      found = contains(deleted);
    }
    memo_.emplace(key, found);
    return found;
  }

 private:
  // Vertices of degree <= 1 never help a pattern of minimum degree >= 2;
  // degree-2 vertices can be suppressed when the pattern has minimum degree >= 3.
  void reduce(SmallGraph& g) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.n; ++v) {
        const int d = g.degree(v);
        if (d <= 1) {
          g.remove_vertex(v);
          changed = true;
          break;
        }
        if (d == 2 && h_.min_degree >= 3) {
          const int a = std::countr_zero(g.rows[v]);
          const int b = std::countr_zero(static_cast<Row>(g.rows[v] & ~(Row{1} << a)));
          g.add_edge(a, b);
          g.remove_vertex(v);
          changed = true;
          break;
        }
      }
    }
  }

  bool large_enough(const SmallGraph& g) const {
    return g.n >= h_.vertices && g.edge_count() >= h_.edges;
  }

  static std::vector<Row> components(const SmallGraph& g) {
    std::vector<Row> out;
    Row seen = 0;
    for (int s = 0; s < g.n; ++s) {
      if (seen & (Row{1} << s)) continue;
      Row comp = static_cast<Row>(Row{1} << s);
      Row frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= static_cast<Row>(frontier - 1);
        const Row fresh = static_cast<Row>(g.rows[v] & ~comp);
        comp |= fresh;
        frontier |= fresh;
      }
      seen |= comp;
      out.push_back(comp);
    }
    return out;
  }

  static SmallGraph restrict(const SmallGraph& g, Row mask) {
    SmallGraph out = g;
    for (int v = g.n - 1; v >= 0; --v) {
      if (!(mask & (Row{1} << v))) out.remove_vertex(v);
    }
    return out;
  }

  bool spanning_subgraph(const SmallGraph& g) const {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> sorted = deg;
    std::sort(sorted.rbegin(), sorted.rend());
    for (int i = 0; i < g.n; ++i) {
      if (sorted[i] < h_.degrees_desc[i]) return false;
    }
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int a = 0; a < g.n && ok; ++a) {
        for (int b = a + 1; b < g.n; ++b) {
          if ((h_.graph.rows[a] & (Row{1} << b)) && !(g.rows[perm[a]] & (Row{1} << perm[b]))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  // Relabels vertices by (degree, neighbour-degree sum) so that many isomorphic
  // states share a memo entry. Not a canonical form; the memo stays exact.
  static Key normalize(const SmallGraph& g) {
    std::array<int, kMinorVertexLimit> score{};
    for (int v = 0; v < g.n; ++v) {
      int s = 0;
      for (Row r = g.rows[v]; r; r &= static_cast<Row>(r - 1)) s += g.degree(std::countr_zero(r));
      score[v] = g.degree(v) * 256 + s;
    }
    std::array<int, kMinorVertexLimit> order{};
    std::iota(order.begin(), order.begin() + g.n, 0);
    std::stable_sort(order.begin(), order.begin() + g.n,
                     [&](int a, int b) { return score[a] > score[b]; });
    std::array<int, kMinorVertexLimit> pos{};
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    Key key{g.n, {}};
    for (int i = 0; i < g.n; ++i) {
      Row r = 0;
      for (Row src = g.rows[order[i]]; src; src &= static_cast<Row>(src - 1)) {
        r |= static_cast<Row>(Row{1} << pos[std::countr_zero(src)]);
      }
      key.rows[i] = r;
    }
    return key;
  }

  const PatternInfo& h_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

const PatternInfo& pattern_info(MinorName name) {
  static const std::array<PatternInfo, 4> table = {
      describe(complete(4)), describe(complete(5)), describe(complete_bipartite(2, 3)),
      describe(complete_bipartite(3, 3))};
  return table[static_cast<std::size_t>(name)];
}

}  // namespace

MinorPattern MinorPattern::make(MinorName name) {
  switch (name) {
    case MinorName::K4:
      return {name, complete(4)};
    case MinorName::K5:
      return {name, complete(5)};
    case MinorName::K23:
      return {name, complete_bipartite(2, 3)};
    case MinorName::K33:
      return {name, complete_bipartite(3, 3)};
  }
  throw std::invalid_argument("unknown minor pattern");
}

std::string_view to_string(MinorName name) {
  switch (name) {
    case MinorName::K4:
      return "K4";
    case MinorName::K5:
      return "K5";
    case MinorName::K23:
      return "K23";
    case MinorName::K33:
      return "K33";
  }
  return "?";
}

bool has_minor(const Graph& g, const MinorPattern& pattern) {
  if (g.n() > kMinorVertexLimit) {
    throw std::invalid_argument("has_minor: graph has " + std::to_string(g.n()) +
                                " vertices, limit is " + std::to_string(kMinorVertexLimit));
  }
  const PatternInfo& info = pattern_info(pattern.name);
  if (!(pattern.target == MinorPattern::make(pattern.name).target)) {
    throw std::invalid_argument("has_minor: pattern target does not match its name");
  }
  SmallGraph s;
  s.n = g.n();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  MinorSearch search(info);
  return search.contains(s);
}

PlanarityClass classify(const Graph& g) {
  PlanarityClass c;
  c.is_planar = !has_minor(g, MinorPattern::make(MinorName::K5)) &&
                !has_minor(g, MinorPattern::make(MinorName::K33));
  c.is_outerplanar = c.is_planar && !has_minor(g, MinorPattern::make(MinorName::K4)) &&
                     !has_minor(g, MinorPattern::make(MinorName::K23));
  return c;
}

}  // namespace maxspread
