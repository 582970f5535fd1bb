#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfx/basis.hpp"
#include "hfx/error.hpp"
#include "hfx/linear.hpp"

namespace hfx {

/// Mutable staging area for the structure-constant tables; frozen into an
/// AlgebraPresentation, which validates it.
struct PresentationTables {
  std::vector<std::string> cell_names;
  std::vector<BasisId> basis;
  std::map<BasisPair, Element> mul;
  std::map<BasisId, TensorElement> comul;
  Element unit;
  std::map<BasisId, Scalar> counit;
  std::optional<std::map<BasisId, unsigned>> degree;
  /// Products whose degree would exceed this cap were truncated to zero.
  std::optional<unsigned> max_degree;
  /// Cells standing for 0-cells (face algebras only).
  std::vector<CellId> vacuum_cells;
};

/// Immutable finite-dimensional algebra/coalgebra given by sparse
/// structure constants. Absent table entries are zero.
class AlgebraPresentation {
 public:
  explicit AlgebraPresentation(PresentationTables tables) : t_(std::move(tables)) {
    std::sort(t_.basis.begin(), t_.basis.end());
    if (std::adjacent_find(t_.basis.begin(), t_.basis.end()) != t_.basis.end())
      throw Error(ErrorCode::basis, "duplicate basis element");
    for (std::size_t i = 0; i < t_.basis.size(); ++i) index_.emplace(t_.basis[i], i);
    for (const auto& b : t_.basis) {
      if (b.upper.value >= t_.cell_names.size() || b.lower.value >= t_.cell_names.size())
        throw Error(ErrorCode::basis, "basis element refers to an undeclared cell");
    }
    for (auto it = t_.mul.begin(); it != t_.mul.end();) {
      require(it->first.first);
      require(it->first.second);
      for (const auto& [k, c] : it->second) require(k);
      it = it->second.is_zero() ? t_.mul.erase(it) : std::next(it);
    }
    for (auto it = t_.comul.begin(); it != t_.comul.end();) {
      require(it->first);
      for (const auto& [k, c] : it->second) {
        require(k.first);
        require(k.second);
      }
      it = it->second.is_zero() ? t_.comul.erase(it) : std::next(it);
    }
    for (const auto& [k, c] : t_.unit) require(k);
    for (auto it = t_.counit.begin(); it != t_.counit.end();) {
      require(it->first);
      it = sgn(it->second) == 0 ? t_.counit.erase(it) : std::next(it);
    }
    if (t_.degree) check_grading();
  }

  [[nodiscard]] const std::vector<std::string>& cell_names() const noexcept { return t_.cell_names; }
  [[nodiscard]] const std::vector<BasisId>& basis() const noexcept { return t_.basis; }
  [[nodiscard]] const std::map<BasisPair, Element>& mul_table() const noexcept { return t_.mul; }
  [[nodiscard]] const std::map<BasisId, TensorElement>& comul_table() const noexcept { return t_.comul; }
  [[nodiscard]] const Element& unit() const noexcept { return t_.unit; }
  [[nodiscard]] const std::map<BasisId, Scalar>& counit_table() const noexcept { return t_.counit; }
  [[nodiscard]] const std::optional<std::map<BasisId, unsigned>>& degrees() const noexcept { return t_.degree; }
  [[nodiscard]] std::optional<unsigned> max_degree() const noexcept { return t_.max_degree; }
  [[nodiscard]] const std::vector<CellId>& vacuum_cells() const noexcept { return t_.vacuum_cells; }
  [[nodiscard]] bool is_graded() const noexcept { return t_.degree.has_value(); }

  [[nodiscard]] bool contains(const BasisId& b) const { return index_.contains(b); }

  [[nodiscard]] CellId cell(std::string_view name) const {
    auto it = std::find(t_.cell_names.begin(), t_.cell_names.end(), name);
    if (it == t_.cell_names.end()) throw Error(ErrorCode::index, "undeclared cell '" + std::string(name) + "'");
    return CellId{static_cast<std::uint32_t>(it - t_.cell_names.begin())};
  }

  /// e(upper;lower) looked up by cell names.
  [[nodiscard]] BasisId basis_id(std::string_view upper, std::string_view lower) const {
    const BasisId b{cell(upper), cell(lower)};
    if (!contains(b)) throw Error(ErrorCode::basis, name(b) + " is not a basis element");
    return b;
  }

  /// Position of b in the ordered basis.
  [[nodiscard]] std::size_t index_of(const BasisId& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) throw Error(ErrorCode::basis, "unknown basis element " + name(b));
    return it->second;
  }

  [[nodiscard]] std::string name(const BasisId& b) const {
    if (b.upper.value >= t_.cell_names.size() || b.lower.value >= t_.cell_names.size())
      return "e(?;?)";
    return render_basis(b, t_.cell_names);
  }

  [[nodiscard]] const Element* product_of(const BasisId& x, const BasisId& y) const {
    auto it = t_.mul.find({x, y});
    return it == t_.mul.end() ? nullptr : &it->second;
  }

  [[nodiscard]] const TensorElement* coproduct_of(const BasisId& x) const {
    auto it = t_.comul.find(x);
    return it == t_.comul.end() ? nullptr : &it->second;
  }

  [[nodiscard]] Scalar counit_at(const BasisId& x) const {
    auto it = t_.counit.find(x);
    return it == t_.counit.end() ? Scalar(0) : it->second;
  }

  [[nodiscard]] unsigned degree_of(const BasisId& b) const {
    if (!t_.degree) return 0;
    auto it = t_.degree->find(b);
    return it == t_.degree->end() ? 0U : it->second;
  }

  /// True when some product along the tuple may have been cut off by the
  /// degree cap; audits skip such tuples.
  template <typename Range>
  [[nodiscard]] bool truncation_affected(const Range& tuple) const {
    if (!t_.max_degree) return false;
    unsigned total = 0;
    for (const BasisId& b : tuple) total += degree_of(b);
    return total > *t_.max_degree;
  }

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return a.t_.cell_names == b.t_.cell_names && a.t_.basis == b.t_.basis && a.t_.mul == b.t_.mul &&
           a.t_.comul == b.t_.comul && a.t_.unit == b.t_.unit && a.t_.counit == b.t_.counit &&
           a.t_.degree == b.t_.degree && a.t_.max_degree == b.t_.max_degree;
  }

 private:
  void require(const BasisId& b) const {
    if (!index_.contains(b)) throw Error(ErrorCode::basis, "table refers to " + name(b) + " outside the basis");
  }

  void check_grading() const {
    const auto& deg = *t_.degree;
    for (const auto& b : t_.basis) {
      if (!deg.contains(b)) throw Error(ErrorCode::cell, "no degree for " + name(b));
    }
    for (const auto& [xy, z] : t_.mul) {
      const unsigned want = deg.at(xy.first) + deg.at(xy.second);
      for (const auto& [k, c] : z) {
        if (deg.at(k) != want) throw Error(ErrorCode::cell, "product " + name(xy.first) + "*" + name(xy.second) + " breaks degree additivity");
      }
    }
    for (const auto& [x, t] : t_.comul) {
      for (const auto& [k, c] : t) {
        if (deg.at(k.first) != deg.at(x) || deg.at(k.second) != deg.at(x))
          throw Error(ErrorCode::cell, "coproduct of " + name(x) + " does not preserve degree");
      }
    }
  }

  PresentationTables t_;
  std::map<BasisId, std::size_t> index_;
};

/// Linear map given on the basis. Basis elements without an image map to 0.
struct LinearEndo {
  std::map<BasisId, Element> images;

  [[nodiscard]] Element operator()(const Element& x) const {
    Element out;
    for (const auto& [b, c] : x) {
      auto it = images.find(b);
      if (it != images.end()) out.add(it->second, c);
    }
    return out;
  }

  [[nodiscard]] Element operator()(const BasisId& b) const { return (*this)(Element(b)); }

  friend bool operator==(const LinearEndo&, const LinearEndo&) = default;
};

}  // namespace hfx
