#include "maxspread/family_kind.hpp"

#include <stdexcept>

namespace maxspread {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::OuterplanarLinear:
      return "outerplanar-linear";
    case FamilyKind::PlanarFirstKind:
      return "planar-first";
    case FamilyKind::PlanarSecondKind:
      return "planar-second";
    case FamilyKind::DoubleWheel:
      return "double-wheel";
  }
  throw std::logic_error("unknown family kind");
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "outerplanar-linear" || name == "outerplanar") return FamilyKind::OuterplanarLinear;
  if (name == "planar-first" || name == "planar") return FamilyKind::PlanarFirstKind;
  if (name == "planar-second") return FamilyKind::PlanarSecondKind;
  if (name == "double-wheel") return FamilyKind::DoubleWheel;
  return std::nullopt;
}

int center_count(FamilyKind kind) { return kind == FamilyKind::OuterplanarLinear ? 1 : 2; }

bool has_ell(FamilyKind kind) { return kind != FamilyKind::DoubleWheel; }

int center_edges(FamilyKind kind) { return kind == FamilyKind::PlanarSecondKind ? 1 : 0; }

int min_ell(FamilyKind) { return 1; }

int max_ell(FamilyKind kind, int n) { return n - center_count(kind); }

int predicted_ell(FamilyKind kind, int n) {
  const int num = center_count(kind) == 1 ? 2 * n - 1 : 2 * n - 2;
  return (num + 2) / 3;
}

}  // namespace maxspread
