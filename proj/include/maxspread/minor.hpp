#pragma once

#include <string_view>

#include "maxspread/graph.hpp"

namespace maxspread {

/// Minor queries enumerate delete/contract branches, so they are limited to
/// small graphs.
inline constexpr int kMinorVertexLimit = 12;

enum class MinorName { K4, K5, K23, K33 };

struct MinorPattern {
  MinorName name;
  Graph target;

  static MinorPattern make(MinorName name);
};

std::string_view to_string(MinorName name);

/// True iff pattern.target is a minor of g. Throws std::invalid_argument when
/// g has more than kMinorVertexLimit vertices.
bool has_minor(const Graph& g, const MinorPattern& pattern);

struct PlanarityClass {
  bool is_planar = false;
  bool is_outerplanar = false;
};

/// Planar: no K5 and no K3,3 minor. Outerplanar: no K4 and no K2,3 minor.
PlanarityClass classify(const Graph& g);

}  // namespace maxspread
