#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfx/ops.hpp"

namespace hfx {

enum class Status { pass, fail, skip };

constexpr std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

/// A basis tuple on which the two sides of an axiom differ. `form` selects
/// which of the axiom's equalities failed (e.g. left vs right unit law).
struct Witness {
  std::vector<BasisId> inputs;
  int form = 0;
  Value lhs;
  Value rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomResult {
  std::string id;
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  /// Tuples left out because a product along them hit the degree cap.
  std::size_t truncated = 0;
  std::string note;
};

struct AuditReport {
  std::vector<AxiomResult> entries;

  [[nodiscard]] const AxiomResult* find(std::string_view id) const {
    for (const auto& e : entries) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  [[nodiscard]] Status status(std::string_view id) const {
    const AxiomResult* e = find(id);
    if (e == nullptr) throw Error(ErrorCode::name, "no audit named " + std::string(id));
    return e->status;
  }

  [[nodiscard]] bool all_pass() const {
    return std::none_of(entries.begin(), entries.end(), [](const AxiomResult& e) { return e.status == Status::fail; });
  }

  void append(AuditReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
  }
};

struct AuditOptions {
  /// Witnesses kept per axiom before the scan of that axiom stops.
  std::size_t witness_cap = 5;
};

// ---------------------------------------------------------------------------
// Axiom evaluation. Every audit goes through evaluate_axiom, so any witness
// can be replayed with exactly the same public operations.

namespace axiom {
inline constexpr std::string_view assoc = "assoc";
inline constexpr std::string_view unit = "unit";
inline constexpr std::string_view coassoc = "coassoc";
inline constexpr std::string_view counit = "counit";
inline constexpr std::string_view delta_mult = "delta_mult";
inline constexpr std::string_view eps_mult = "eps_mult";
inline constexpr std::string_view eps_mult_weak = "eps_mult_weak";
inline constexpr std::string_view delta_unit = "delta_unit";
inline constexpr std::string_view weak_unit = "weak_unit";
inline constexpr std::string_view antihom = "antihom";
inline constexpr std::string_view antipode_unit = "antipode_unit";
inline constexpr std::string_view antipode_involution = "antipode_involution";
inline constexpr std::string_view von_neumann = "von_neumann";
inline constexpr std::string_view vacuum_orth = "vacuum_orth";
inline constexpr std::string_view face_idempotents = "face_idempotents";
inline constexpr std::string_view face_unit_sum = "face_unit_sum";
}  // namespace axiom

enum class TupleDomain { basis, vacuum };

struct AxiomShape {
  std::size_t arity;
  TupleDomain domain;
  bool needs_antipode;
};

inline std::optional<AxiomShape> axiom_shape(std::string_view id) {
  using namespace axiom;
  if (id == assoc || id == eps_mult_weak) return AxiomShape{3, TupleDomain::basis, false};
  if (id == unit || id == coassoc || id == counit) return AxiomShape{1, TupleDomain::basis, false};
  if (id == delta_mult || id == eps_mult) return AxiomShape{2, TupleDomain::basis, false};
  if (id == delta_unit || id == weak_unit) return AxiomShape{0, TupleDomain::basis, false};
  if (id == antihom) return AxiomShape{2, TupleDomain::basis, true};
  if (id == antipode_unit) return AxiomShape{0, TupleDomain::basis, true};
  if (id == antipode_involution || id == von_neumann) return AxiomShape{1, TupleDomain::basis, true};
  if (id == vacuum_orth) return AxiomShape{2, TupleDomain::vacuum, false};
  if (id == face_idempotents) return AxiomShape{1, TupleDomain::vacuum, false};
  if (id == face_unit_sum) return AxiomShape{0, TupleDomain::vacuum, false};
  return std::nullopt;
}

/// Vacuum basis elements e(i;j), i.e. pairs of 0-cells, in basis order.
inline std::vector<BasisId> vacuum_basis(const AlgebraPresentation& alg) {
  std::vector<BasisId> out;
  const auto& vac = alg.vacuum_cells();
  for (const auto& b : alg.basis()) {
    if (std::find(vac.begin(), vac.end(), b.upper) != vac.end() &&
        std::find(vac.begin(), vac.end(), b.lower) != vac.end())
      out.push_back(b);
  }
  return out;
}

/// ė_i = Σ_j e(i;j).
inline Element row_idempotent(const AlgebraPresentation& alg, CellId i) {
  Element out;
  for (CellId j : alg.vacuum_cells()) out.add(BasisId{i, j}, Scalar(1));
  return out;
}

/// e_j = Σ_i e(i;j).
inline Element column_idempotent(const AlgebraPresentation& alg, CellId j) {
  Element out;
  for (CellId i : alg.vacuum_cells()) out.add(BasisId{i, j}, Scalar(1));
  return out;
}

using Comparison = std::pair<Value, Value>;

/// All equalities the axiom asserts on one input tuple, as (lhs, rhs) pairs.
inline std::vector<Comparison> evaluate_axiom(const AlgebraPresentation& alg, std::string_view id,
                                              std::span<const BasisId> in, const LinearEndo* antipode = nullptr) {
  using namespace axiom;
  const auto shape = axiom_shape(id);
  if (!shape) throw Error(ErrorCode::name, "unknown axiom " + std::string(id));
  if (in.size() != shape->arity) throw Error(ErrorCode::index, "wrong number of inputs for " + std::string(id));
  if (shape->needs_antipode && antipode == nullptr) throw Error(ErrorCode::sigma, std::string(id) + " needs an antipode");
  for (const auto& b : in) {
    if (!alg.contains(b)) throw Error(ErrorCode::basis, "unknown basis element " + alg.name(b));
  }
  auto el = [](const BasisId& b) { return Element(b); };
  std::vector<Comparison> out;

  if (id == assoc) {
    out.emplace_back(multiply(multiply(el(in[0]), el(in[1]), alg), el(in[2]), alg),
                     multiply(el(in[0]), multiply(el(in[1]), el(in[2]), alg), alg));
  } else if (id == unit) {
    out.emplace_back(multiply(alg.unit(), el(in[0]), alg), el(in[0]));
    out.emplace_back(multiply(el(in[0]), alg.unit(), alg), el(in[0]));
  } else if (id == coassoc) {
    const TensorElement d = comultiply(el(in[0]), alg);
    out.emplace_back(comultiply_left(d, alg), comultiply_right(d, alg));
  } else if (id == counit) {
    const TensorElement d = comultiply(el(in[0]), alg);
    out.emplace_back(counit_left(d, alg), el(in[0]));
    out.emplace_back(counit_right(d, alg), el(in[0]));
  } else if (id == delta_mult) {
    out.emplace_back(comultiply(multiply(el(in[0]), el(in[1]), alg), alg),
                     multiply(comultiply(el(in[0]), alg), comultiply(el(in[1]), alg), alg));
  } else if (id == eps_mult) {
    out.emplace_back(counit_of(multiply(el(in[0]), el(in[1]), alg), alg),
                     Scalar(counit_of(el(in[0]), alg) * counit_of(el(in[1]), alg)));
  } else if (id == eps_mult_weak) {
    // ε(xyz) = ε(x y₁) ε(y₂ z) = ε(x y₂) ε(y₁ z)
    const Scalar lhs = counit_of(multiply(multiply(el(in[0]), el(in[1]), alg), el(in[2]), alg), alg);
    Scalar first = 0;
    Scalar second = 0;
    for (const auto& [t, c] : comultiply(el(in[1]), alg)) {
      first += c * counit_of(multiply(el(in[0]), el(t.first), alg), alg) *
               counit_of(multiply(el(t.second), el(in[2]), alg), alg);
      second += c * counit_of(multiply(el(in[0]), el(t.second), alg), alg) *
                counit_of(multiply(el(t.first), el(in[2]), alg), alg);
    }
    out.emplace_back(lhs, first);
    out.emplace_back(lhs, second);
  } else if (id == delta_unit) {
    out.emplace_back(comultiply(alg.unit(), alg), tensor(alg.unit(), alg.unit()));
  } else if (id == weak_unit) {
    // (Δ⊗1)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
    const TensorElement d1 = comultiply(alg.unit(), alg);
    const Tensor3Element lhs = comultiply_left(d1, alg);
    const Tensor3Element d1_one = tensor(d1, alg.unit());
    const Tensor3Element one_d1 = tensor(alg.unit(), d1);
    out.emplace_back(lhs, multiply(d1_one, one_d1, alg));
    out.emplace_back(lhs, multiply(one_d1, d1_one, alg));
  } else if (id == antihom) {
    const LinearEndo& s = *antipode;
    out.emplace_back(s(multiply(el(in[0]), el(in[1]), alg)), multiply(s(in[1]), s(in[0]), alg));
  } else if (id == antipode_unit) {
    out.emplace_back((*antipode)(alg.unit()), alg.unit());
  } else if (id == antipode_involution) {
    out.emplace_back((*antipode)((*antipode)(in[0])), el(in[0]));
  } else if (id == von_neumann) {
    out.emplace_back(von_neumann_image(el(in[0]), alg, *antipode), el(in[0]));
  } else if (id == vacuum_orth) {
    Element expected;
    if (in[0] == in[1]) expected = el(in[0]);
    out.emplace_back(multiply(el(in[0]), el(in[1]), alg), expected);
  } else if (id == face_idempotents) {
    // input e(i;k) stands for the pair of 0-cells (i, k)
    const CellId i = in[0].upper;
    const CellId k = in[0].lower;
    const Element row_i = row_idempotent(alg, i);
    const Element col_i = column_idempotent(alg, i);
    const Element row_k = row_idempotent(alg, k);
    const Element col_k = column_idempotent(alg, k);
    out.emplace_back(multiply(row_i, row_k, alg), i == k ? row_i : Element{});
    out.emplace_back(multiply(col_i, col_k, alg), i == k ? col_i : Element{});
    out.emplace_back(multiply(row_i, col_k, alg), el(in[0]));
    out.emplace_back(multiply(col_k, row_i, alg), el(in[0]));
  } else if (id == face_unit_sum) {
    Element rows;
    Element cols;
    for (CellId i : alg.vacuum_cells()) {
      rows += row_idempotent(alg, i);
      cols += column_idempotent(alg, i);
    }
    out.emplace_back(rows, alg.unit());
    out.emplace_back(cols, alg.unit());
  }
  return out;
}

/// Exhaustive scan of one axiom over every input tuple of its domain.
inline AxiomResult run_axiom(const AlgebraPresentation& alg, std::string_view id, const AuditOptions& opts,
                             const LinearEndo* antipode = nullptr) {
  const auto shape = axiom_shape(id);
  if (!shape) throw Error(ErrorCode::name, "unknown axiom " + std::string(id));
  AxiomResult result{std::string(id), Status::pass, {}, 0, {}};
  const std::vector<BasisId> domain =
      shape->domain == TupleDomain::basis ? alg.basis() : vacuum_basis(alg);
  const std::size_t n = domain.size();
  std::vector<std::size_t> pos(shape->arity, 0);
  std::vector<BasisId> tuple(shape->arity);
  if (n == 0 && shape->arity > 0) return result;

  for (bool more = true; more;) {
    for (std::size_t k = 0; k < pos.size(); ++k) tuple[k] = domain[pos[k]];
    if (alg.truncation_affected(tuple)) {
      ++result.truncated;
    } else {
      const auto comparisons = evaluate_axiom(alg, id, tuple, antipode);
      for (std::size_t f = 0; f < comparisons.size(); ++f) {
        if (comparisons[f].first != comparisons[f].second) {
          result.status = Status::fail;
          result.witnesses.push_back({tuple, static_cast<int>(f), comparisons[f].first, comparisons[f].second});
          break;
        }
      }
      if (result.witnesses.size() >= std::max<std::size_t>(1, opts.witness_cap)) break;
    }
    // odometer over the tuple positions, last position fastest
    more = false;
    for (std::size_t k = pos.size(); k-- > 0;) {
      if (++pos[k] < n) {
        more = true;
        break;
      }
      pos[k] = 0;
    }
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const Witness& a, const Witness& b) { return std::tie(a.inputs, a.form) < std::tie(b.inputs, b.form); });
  return result;
}

/// Associativity and unitality.
inline AuditReport audit_algebra(const AlgebraPresentation& alg, const AuditOptions& opts = {}) {
  return {{run_axiom(alg, axiom::assoc, opts), run_axiom(alg, axiom::unit, opts)}};
}

/// Coassociativity and the two counit laws.
inline AuditReport audit_coalgebra(const AlgebraPresentation& alg, const AuditOptions& opts = {}) {
  return {{run_axiom(alg, axiom::coassoc, opts), run_axiom(alg, axiom::counit, opts)}};
}

/// Strict bialgebra compatibility (Δ and ε multiplicative, Δ(1) = 1⊗1)
/// together with the weak variants (ε weakly multiplicative, weak unit
/// coherence), each reported separately.
inline AuditReport audit_bialgebra_compat(const AlgebraPresentation& alg, const AuditOptions& opts = {}) {
  return {{run_axiom(alg, axiom::delta_mult, opts), run_axiom(alg, axiom::eps_mult, opts),
           run_axiom(alg, axiom::delta_unit, opts), run_axiom(alg, axiom::weak_unit, opts),
           run_axiom(alg, axiom::eps_mult_weak, opts)}};
}

/// Anti-homomorphism, S(1) = 1, S² = id and the von Neumann identity
/// μ₃(1⊗S⊗1)Δ₃ = id. The last one is skipped unless the algebra and
/// coalgebra audits pass, since μ₃ and Δ₃ are only well defined then.
inline AuditReport audit_antipode(const AlgebraPresentation& alg, const LinearEndo& antipode,
                                  const AuditOptions& opts = {}) {
  AuditReport report{{run_axiom(alg, axiom::antihom, opts, &antipode),
                      run_axiom(alg, axiom::antipode_unit, opts, &antipode),
                      run_axiom(alg, axiom::antipode_involution, opts, &antipode)}};
  const AuditOptions quick{1};
  const bool well_defined = audit_algebra(alg, quick).all_pass() && audit_coalgebra(alg, quick).all_pass();
  if (well_defined) {
    report.entries.push_back(run_axiom(alg, axiom::von_neumann, opts, &antipode));
  } else {
    report.entries.push_back({std::string(axiom::von_neumann), Status::skip, {}, 0,
                              "algebra or coalgebra audit failed; mu3/Delta3 ambiguous"});
  }
  return report;
}

/// Replays a witness; true when the recorded sides are reproduced and differ.
inline bool replay_witness(const AlgebraPresentation& alg, std::string_view id, const Witness& w,
                           const LinearEndo* antipode = nullptr) {
  const auto comparisons = evaluate_axiom(alg, id, w.inputs, antipode);
  if (w.form < 0 || static_cast<std::size_t>(w.form) >= comparisons.size()) return false;
  const auto& [lhs, rhs] = comparisons[static_cast<std::size_t>(w.form)];
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

}  // namespace hfx
