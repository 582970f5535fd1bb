#pragma once

#include <array>
#include <map>
#include <utility>
#include <variant>

#include "hfx/basis.hpp"
#include "hfx/scalar.hpp"

namespace hfx {

/// Sparse formal linear combination over an ordered key type. Zero
/// coefficients are never stored, so structural equality is value equality.
template <typename Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, Scalar c = Scalar(1)) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& c = Scalar(1)) {
    if (sgn(c) == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  [[nodiscard]] Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
  [[nodiscard]] const_iterator begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Scalar& c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

using BasisPair = std::pair<BasisId, BasisId>;
using BasisTriple = std::array<BasisId, 3>;

using Element = LinearCombination<BasisId>;
using TensorElement = LinearCombination<BasisPair>;
using Tensor3Element = LinearCombination<BasisTriple>;

/// Any side of an axiom comparison.
using Value = std::variant<Scalar, Element, TensorElement, Tensor3Element>;

}  // namespace hfx
