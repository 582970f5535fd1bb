#pragma once

#include "hfx/linear.hpp"
#include "hfx/presentation.hpp"

namespace hfx {

namespace detail {

inline void require_members(const Element& x, const AlgebraPresentation& alg) {
  for (const auto& [b, c] : x) {
    if (!alg.contains(b)) throw Error(ErrorCode::basis, "unknown basis element " + alg.name(b));
  }
}

}  // namespace detail

/// Bilinear extension of the multiplication table.
inline Element multiply(const Element& x, const Element& y, const AlgebraPresentation& alg) {
  detail::require_members(x, alg);
  detail::require_members(y, alg);
  Element out;
  for (const auto& [bx, cx] : x) {
    for (const auto& [by, cy] : y) {
      if (const Element* p = alg.product_of(bx, by)) out.add(*p, cx * cy);
    }
  }
  return out;
}

inline Element multiply(const BasisId& x, const BasisId& y, const AlgebraPresentation& alg) {
  return multiply(Element(x), Element(y), alg);
}

/// Linear extension of the comultiplication table.
inline TensorElement comultiply(const Element& x, const AlgebraPresentation& alg) {
  detail::require_members(x, alg);
  TensorElement out;
  for (const auto& [b, c] : x) {
    if (const TensorElement* t = alg.coproduct_of(b)) out.add(*t, c);
  }
  return out;
}

inline Scalar counit_of(const Element& x, const AlgebraPresentation& alg) {
  detail::require_members(x, alg);
  Scalar out = 0;
  for (const auto& [b, c] : x) out += c * alg.counit_at(b);
  return out;
}

inline TensorElement tensor(const Element& x, const Element& y) {
  TensorElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

inline Tensor3Element tensor(const TensorElement& xy, const Element& z) {
  Tensor3Element out;
  for (const auto& [ab, c] : xy) {
    for (const auto& [e, ce] : z) out.add({ab.first, ab.second, e}, c * ce);
  }
  return out;
}

inline Tensor3Element tensor(const Element& x, const TensorElement& yz) {
  Tensor3Element out;
  for (const auto& [a, ca] : x) {
    for (const auto& [bc, c] : yz) out.add({a, bc.first, bc.second}, ca * c);
  }
  return out;
}

/// Componentwise product in A ⊗ A.
inline TensorElement multiply(const TensorElement& s, const TensorElement& t, const AlgebraPresentation& alg) {
  TensorElement out;
  for (const auto& [ab, c] : s) {
    for (const auto& [xy, d] : t) {
      const Element* left = alg.product_of(ab.first, xy.first);
      if (left == nullptr) continue;
      const Element* right = alg.product_of(ab.second, xy.second);
      if (right == nullptr) continue;
      const Scalar cd = c * d;
      for (const auto& [l, cl] : *left) {
        for (const auto& [r, cr] : *right) out.add({l, r}, cd * cl * cr);
      }
    }
  }
  return out;
}

/// Componentwise product in A ⊗ A ⊗ A.
inline Tensor3Element multiply(const Tensor3Element& s, const Tensor3Element& t, const AlgebraPresentation& alg) {
  Tensor3Element out;
  for (const auto& [k1, c] : s) {
    for (const auto& [k2, d] : t) {
      const Element* p0 = alg.product_of(k1[0], k2[0]);
      const Element* p1 = p0 ? alg.product_of(k1[1], k2[1]) : nullptr;
      const Element* p2 = p1 ? alg.product_of(k1[2], k2[2]) : nullptr;
      if (p2 == nullptr) continue;
      const Scalar cd = c * d;
      for (const auto& [a, ca] : *p0) {
        for (const auto& [b, cb] : *p1) {
          for (const auto& [e, ce] : *p2) out.add({a, b, e}, cd * ca * cb * ce);
        }
      }
    }
  }
  return out;
}

/// (Δ ⊗ 1) applied to a tensor.
inline Tensor3Element comultiply_left(const TensorElement& t, const AlgebraPresentation& alg) {
  Tensor3Element out;
  for (const auto& [ab, c] : t) {
    if (const TensorElement* d = alg.coproduct_of(ab.first)) {
      for (const auto& [l, cl] : *d) out.add({l.first, l.second, ab.second}, c * cl);
    }
  }
  return out;
}

/// (1 ⊗ Δ) applied to a tensor.
inline Tensor3Element comultiply_right(const TensorElement& t, const AlgebraPresentation& alg) {
  Tensor3Element out;
  for (const auto& [ab, c] : t) {
    if (const TensorElement* d = alg.coproduct_of(ab.second)) {
      for (const auto& [r, cr] : *d) out.add({ab.first, r.first, r.second}, c * cr);
    }
  }
  return out;
}

/// (ε ⊗ 1) applied to a tensor.
inline Element counit_left(const TensorElement& t, const AlgebraPresentation& alg) {
  Element out;
  for (const auto& [ab, c] : t) out.add(ab.second, c * alg.counit_at(ab.first));
  return out;
}

/// (1 ⊗ ε) applied to a tensor.
inline Element counit_right(const TensorElement& t, const AlgebraPresentation& alg) {
  Element out;
  for (const auto& [ab, c] : t) out.add(ab.first, c * alg.counit_at(ab.second));
  return out;
}

/// Δ₃ = (Δ ⊗ 1)Δ.
inline Tensor3Element comultiply3(const Element& x, const AlgebraPresentation& alg) {
  return comultiply_left(comultiply(x, alg), alg);
}

/// μ₃ = μ(μ ⊗ 1).
inline Element multiply3(const Tensor3Element& t, const AlgebraPresentation& alg) {
  Element out;
  for (const auto& [k, c] : t) {
    const Element* ab = alg.product_of(k[0], k[1]);
    if (ab == nullptr) continue;
    for (const auto& [m, cm] : *ab) {
      if (const Element* abc = alg.product_of(m, k[2])) out.add(*abc, c * cm);
    }
  }
  return out;
}

/// μ₃(1 ⊗ S ⊗ 1)Δ₃(x).
inline Element von_neumann_image(const Element& x, const AlgebraPresentation& alg, const LinearEndo& antipode) {
  Tensor3Element twisted;
  for (const auto& [k, c] : comultiply3(x, alg)) {
    for (const auto& [m, cm] : antipode(k[1])) twisted.add({k[0], m, k[2]}, c * cm);
  }
  return multiply3(twisted, alg);
}

}  // namespace hfx
