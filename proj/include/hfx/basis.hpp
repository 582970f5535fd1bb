#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hfx {

/// Interned cell name; the numeric value is the declaration position, which
/// fixes the total order used everywhere.
struct CellId {
  std::uint32_t value = 0;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// The basis symbol e(upper;lower).
struct BasisId {
  CellId upper;
  CellId lower;
  friend auto operator<=>(const BasisId&, const BasisId&) = default;
};

inline BasisId transpose(BasisId b) noexcept { return {b.lower, b.upper}; }

inline std::string render_basis(const BasisId& b, const std::vector<std::string>& names) {
  return "e(" + names.at(b.upper.value) + ";" + names.at(b.lower.value) + ")";
}

}  // namespace hfx
