#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace maxspread {

/// Candidate extremal families. Center vertices come first in every graph.
///   OuterplanarLinear  K1 v (P_l u (n-1-l)K1)
///   PlanarFirstKind    2K1 v (P_l u (n-2-l)K1)
///   PlanarSecondKind   K2 v (P_l u (n-2-l)K1)
///   DoubleWheel        2K1 v C_{n-2}
enum class FamilyKind { OuterplanarLinear, PlanarFirstKind, PlanarSecondKind, DoubleWheel };

std::string_view to_string(FamilyKind kind);
/// Accepts the canonical names ("outerplanar-linear", "planar-first",
/// "planar-second", "double-wheel") and the short forms "outerplanar",
/// "planar" (first kind).
std::optional<FamilyKind> parse_family_kind(std::string_view name);

int center_count(FamilyKind kind);
bool has_ell(FamilyKind kind);
/// 1 if the centers are adjacent (second kind), else 0.
int center_edges(FamilyKind kind);
int min_ell(FamilyKind kind);
int max_ell(FamilyKind kind, int n);
/// Predicted optimal path length: ceil((2n-1)/3) with one center,
/// ceil((2n-2)/3) with two.
int predicted_ell(FamilyKind kind, int n);

}  // namespace maxspread
