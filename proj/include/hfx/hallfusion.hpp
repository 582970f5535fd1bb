#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfx/audit.hpp"
#include "hfx/presentation.hpp"

namespace hfx {

using ObjectIndex = std::size_t;
using Triple = std::array<ObjectIndex, 3>;

/// Dimension-level model of a finite skeletal Vect-category whose only
/// nonzero homs are the endomorphism algebras A(a,a).
struct DimCategory {
  std::vector<std::string> objects;
  std::vector<std::uint64_t> dims;

  [[nodiscard]] std::size_t size() const noexcept { return objects.size(); }

  [[nodiscard]] ObjectIndex index_of(std::string_view name) const {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw Error(ErrorCode::index, "undeclared object '" + std::string(name) + "'");
    return static_cast<ObjectIndex>(it - objects.begin());
  }

  [[nodiscard]] Scalar dim(ObjectIndex a) const { return Scalar(static_cast<unsigned long>(dims.at(a))); }

  void validate() const {
    if (dims.size() != objects.size()) throw Error(ErrorCode::index, "object/dimension count mismatch");
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (!seen.insert(objects[i]).second) throw Error(ErrorCode::index, "duplicate object '" + objects[i] + "'");
      if (dims[i] == 0) throw Error(ErrorCode::range, "object '" + objects[i] + "' has dimension 0");
    }
  }

  friend bool operator==(const DimCategory&, const DimCategory&) = default;
};

/// dim p(a,b,u) as a sparse tensor, plus the unit object.
struct PromonoidalDimData {
  DimCategory base;
  std::map<Triple, std::uint64_t> entries;
  ObjectIndex unit = 0;

  [[nodiscard]] std::uint64_t at(ObjectIndex a, ObjectIndex b, ObjectIndex u) const {
    auto it = entries.find({a, b, u});
    return it == entries.end() ? 0 : it->second;
  }

  void set(ObjectIndex a, ObjectIndex b, ObjectIndex u, std::uint64_t count) {
    if (count == 0) {
      entries.erase({a, b, u});
    } else {
      entries[{a, b, u}] = count;
    }
  }

  void validate() const {
    base.validate();
    const std::size_t n = base.size();
    if (unit >= n) throw Error(ErrorCode::index, "unit object out of range");
    for (const auto& [k, v] : entries) {
      if (k[0] >= n || k[1] >= n || k[2] >= n) throw Error(ErrorCode::index, "tensor entry refers to an undeclared object");
    }
  }

  friend bool operator==(const PromonoidalDimData& a, const PromonoidalDimData& b) {
    auto strip = [](const std::map<Triple, std::uint64_t>& m) {
      std::map<Triple, std::uint64_t> out;
      for (const auto& [k, v] : m) {
        if (v != 0) out.emplace(k, v);
      }
      return out;
    };
    return a.base == b.base && a.unit == b.unit && strip(a.entries) == strip(b.entries);
  }
};

/// Object-level antipode σ: A^op → A.
struct AntipodeMap {
  std::vector<ObjectIndex> image;

  [[nodiscard]] ObjectIndex operator()(ObjectIndex a) const { return image.at(a); }
  friend bool operator==(const AntipodeMap&, const AntipodeMap&) = default;
};

struct HallFusionSpec {
  DimCategory category;
  PromonoidalDimData p_data;  // upper slots, unit I
  PromonoidalDimData q_data;  // lower slots, unit J
  std::optional<AntipodeMap> sigma;

  friend bool operator==(const HallFusionSpec&, const HallFusionSpec&) = default;
};

// ---------------------------------------------------------------------------
// Contraction ("dimension shadow") reports

struct ContractionWitness {
  std::string label;
  std::vector<std::string> key;
  Scalar value;
  Scalar required;
};

struct TableRow {
  std::vector<std::string> key;
  Scalar value;
};

struct ContractionCheck {
  std::string id;
  Status status = Status::pass;
  std::vector<ContractionWitness> witnesses;
  std::size_t failures = 0;
  std::vector<std::pair<std::string, std::vector<TableRow>>> tables;
  std::string note;

  void record(std::size_t cap, ContractionWitness w) {
    status = Status::fail;
    ++failures;
    if (witnesses.size() < cap) witnesses.push_back(std::move(w));
  }
};

struct ContractionReport {
  std::vector<ContractionCheck> checks;
  /// Set when some weighted coend sum is not an integer.
  bool non_integral = false;
  std::vector<std::string> warnings;

  [[nodiscard]] const ContractionCheck* find(std::string_view id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  [[nodiscard]] Status status(std::string_view id) const {
    const ContractionCheck* c = find(id);
    if (c == nullptr) throw Error(ErrorCode::name, "no contraction named " + std::string(id));
    return c->status;
  }

  /// Merges checks with the same id (status is the conjunction).
  void append(ContractionReport other) {
    for (auto& c : other.checks) {
      auto it = std::find_if(checks.begin(), checks.end(), [&](const ContractionCheck& x) { return x.id == c.id; });
      if (it == checks.end()) {
        checks.push_back(std::move(c));
        continue;
      }
      if (c.status == Status::fail) it->status = Status::fail;
      it->failures += c.failures;
      for (auto& w : c.witnesses) it->witnesses.push_back(std::move(w));
      for (auto& t : c.tables) it->tables.push_back(std::move(t));
      if (!c.note.empty()) it->note += (it->note.empty() ? "" : "; ") + c.note;
    }
    non_integral = non_integral || other.non_integral;
    for (auto& w : other.warnings) warnings.push_back(std::move(w));
  }
};

struct ContractionOptions {
  std::size_t witness_cap = 5;
};

namespace detail {

inline std::vector<std::string> names_of(const DimCategory& cat, std::initializer_list<ObjectIndex> idx) {
  std::vector<std::string> out;
  for (ObjectIndex i : idx) out.push_back(cat.objects.at(i));
  return out;
}

inline void check_integral(ContractionReport& report, const Scalar& v, const std::string& what) {
  if (!is_integral(v)) {
    if (!report.non_integral) report.warnings.push_back("non-integral weighted sum " + what + " = " + to_string(v));
    report.non_integral = true;
  }
}

inline void require_shared_base(const HallFusionSpec& spec) {
  if (!(spec.p_data.base == spec.category) || !(spec.q_data.base == spec.category))
    throw Error(ErrorCode::mismatch, "p and q data must live on the same category");
  spec.p_data.validate();
  spec.q_data.validate();
}

inline void require_sigma(const HallFusionSpec& spec) {
  if (!spec.sigma) throw Error(ErrorCode::sigma, "no antipode map given");
  const auto& s = spec.sigma->image;
  const std::size_t n = spec.category.size();
  if (s.size() != n) throw Error(ErrorCode::sigma, "antipode map is not total");
  for (ObjectIndex a = 0; a < n; ++a) {
    if (s[a] >= n) throw Error(ErrorCode::sigma, "antipode map leaves the object set");
  }
  for (ObjectIndex a = 0; a < n; ++a) {
    if (s[s[a]] != a) throw Error(ErrorCode::sigma, "antipode map is not an involution");
    if (spec.category.dims[s[a]] != spec.category.dims[a])
      throw Error(ErrorCode::sigma, "antipode map does not preserve dimensions");
  }
  if (spec.p_data.unit != s[spec.q_data.unit]) throw Error(ErrorCode::sigma, "unit condition I = sigma(J) fails");
}

}  // namespace detail

/// Weighted dimension of the inner coend ∫^u T(a,b,u) ⊗ T(u,c,e):
/// Σ_u T[a,b,u]·T[u,c,e]/d(u).
inline Scalar compute_q3(const PromonoidalDimData& data, ObjectIndex a, ObjectIndex b, ObjectIndex c, ObjectIndex e) {
  const std::size_t n = data.base.size();
  if (a >= n || b >= n || c >= n || e >= n) throw Error(ErrorCode::index, "object index out of range");
  Scalar sum = 0;
  for (ObjectIndex u = 0; u < n; ++u) {
    const auto left = data.at(a, b, u);
    if (left == 0) continue;
    const auto right = data.at(u, c, e);
    if (right == 0) continue;
    sum += Scalar(static_cast<unsigned long>(left * right)) / data.base.dim(u);
  }
  return sum;
}

inline Scalar compute_q3(const PromonoidalDimData& data, std::string_view a, std::string_view b, std::string_view c,
                         std::string_view e) {
  const auto& cat = data.base;
  return compute_q3(data, cat.index_of(a), cat.index_of(b), cat.index_of(c), cat.index_of(e));
}

/// The other bracketing: Σ_w T[b,c,w]·T[a,w,e]/d(w).
inline Scalar compute_q3_right(const PromonoidalDimData& data, ObjectIndex a, ObjectIndex b, ObjectIndex c,
                               ObjectIndex e) {
  Scalar sum = 0;
  for (ObjectIndex w = 0; w < data.base.size(); ++w) {
    const auto left = data.at(b, c, w);
    if (left == 0) continue;
    const auto right = data.at(a, w, e);
    if (right == 0) continue;
    sum += Scalar(static_cast<unsigned long>(left * right)) / data.base.dim(w);
  }
  return sum;
}

/// C1 (unit shadows) and C2 (both bracketings of the weighted triple tensor).
inline ContractionReport validate_promonoidal(const PromonoidalDimData& data, std::string_view label = "p",
                                              const ContractionOptions& opts = {}) {
  data.validate();
  const auto& cat = data.base;
  const std::size_t n = cat.size();
  const std::string tag(label);
  ContractionReport report;

  ContractionCheck c1{"C1"};
  const ObjectIndex unit = data.unit;
  for (ObjectIndex b = 0; b < n; ++b) {
    for (ObjectIndex u = 0; u < n; ++u) {
      const Scalar required = b == u ? cat.dim(b) : Scalar(0);
      const Scalar left(static_cast<unsigned long>(data.at(unit, b, u)));
      if (left != required)
        c1.record(opts.witness_cap, {tag + "[unit,b,u]", detail::names_of(cat, {b, u}), left, required});
      const Scalar right(static_cast<unsigned long>(data.at(b, unit, u)));
      if (right != required)
        c1.record(opts.witness_cap, {tag + "[a,unit,u]", detail::names_of(cat, {b, u}), right, required});
    }
  }
  report.checks.push_back(std::move(c1));

  ContractionCheck c2{"C2"};
  std::vector<TableRow> left_rows;
  std::vector<TableRow> right_rows;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) {
      for (ObjectIndex c = 0; c < n; ++c) {
        for (ObjectIndex e = 0; e < n; ++e) {
          const Scalar left = compute_q3(data, a, b, c, e);
          const Scalar right = compute_q3_right(data, a, b, c, e);
          auto key = detail::names_of(cat, {a, b, c, e});
          detail::check_integral(report, left, tag + "3(" + key[0] + "," + key[1] + "," + key[2] + ";" + key[3] + ")");
          detail::check_integral(report, right, tag + "3'(" + key[0] + "," + key[1] + "," + key[2] + ";" + key[3] + ")");
          if (sgn(left) != 0) left_rows.push_back({key, left});
          if (sgn(right) != 0) right_rows.push_back({key, right});
          if (left != right) c2.record(opts.witness_cap, {tag + "3 bracketings", key, left, right});
        }
      }
    }
  }
  c2.tables.emplace_back(tag + "3", std::move(left_rows));
  c2.tables.emplace_back(tag + "3_right", std::move(right_rows));
  report.checks.push_back(std::move(c2));
  return report;
}

/// Promonoidal structure on pairs (a,c) with unit (I,J) and tensor
/// P[a,b,u]·Q[c,d,v].
inline PromonoidalDimData tensor_promonoidal(const PromonoidalDimData& pd, const PromonoidalDimData& qd) {
  if (!(pd.base == qd.base)) throw Error(ErrorCode::mismatch, "tensor product needs a shared category");
  pd.validate();
  qd.validate();
  const std::size_t n = pd.base.size();
  auto pair_index = [n](ObjectIndex a, ObjectIndex c) { return a * n + c; };
  PromonoidalDimData out;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex c = 0; c < n; ++c) {
      out.base.objects.push_back("(" + pd.base.objects[a] + "," + pd.base.objects[c] + ")");
      out.base.dims.push_back(pd.base.dims[a] * pd.base.dims[c]);
    }
  }
  for (const auto& [pk, pv] : pd.entries) {
    if (pv == 0) continue;
    for (const auto& [qk, qv] : qd.entries) {
      if (qv == 0) continue;
      out.entries[{pair_index(pk[0], qk[0]), pair_index(pk[1], qk[1]), pair_index(pk[2], qk[2])}] = pv * qv;
    }
  }
  out.unit = pair_index(pd.unit, qd.unit);
  return out;
}

/// Basis e(a;b) over all object pairs, with
///   e(a;c)·e(b;d) = Σ_{u,v} P[a,b,u]·Q[c,d,v]/(d(u)·d(v)) e(u;v),
///   1 = e(I;J),  Δe(a;b) = Σ_u e(a;u)⊗e(u;b),  ε e(a;b) = δ_{a,b}.
/// Non-promonoidal data is accepted so the auditors can show what breaks.
inline AlgebraPresentation build_hall_fusion(const HallFusionSpec& spec) {
  spec.category.validate();
  detail::require_shared_base(spec);
  const auto& cat = spec.category;
  const std::size_t n = cat.size();
  auto cell = [](ObjectIndex i) { return CellId{static_cast<std::uint32_t>(i)}; };

  // rows[(a,b)] = [(u, count)]
  auto rows_of = [n](const PromonoidalDimData& d) {
    std::vector<std::vector<std::pair<ObjectIndex, std::uint64_t>>> rows(n * n);
    for (const auto& [k, v] : d.entries) {
      if (v != 0) rows[k[0] * n + k[1]].emplace_back(k[2], v);
    }
    return rows;
  };
  const auto p_rows = rows_of(spec.p_data);
  const auto q_rows = rows_of(spec.q_data);

  PresentationTables t;
  t.cell_names = cat.objects;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) t.basis.push_back({cell(a), cell(b)});
  }
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex c = 0; c < n; ++c) {
      for (ObjectIndex b = 0; b < n; ++b) {
        const auto& prow = p_rows[a * n + b];
        if (prow.empty()) continue;
        for (ObjectIndex d = 0; d < n; ++d) {
          const auto& qrow = q_rows[c * n + d];
          if (qrow.empty()) continue;
          Element product;
          for (const auto& [u, pv] : prow) {
            for (const auto& [v, qv] : qrow) {
              Scalar coeff(static_cast<unsigned long>(pv));
              coeff *= static_cast<unsigned long>(qv);
              coeff /= Scalar(static_cast<unsigned long>(cat.dims[u] * cat.dims[v]));
              product.add({cell(u), cell(v)}, coeff);
            }
          }
          if (!product.is_zero()) t.mul.emplace(BasisPair{{cell(a), cell(c)}, {cell(b), cell(d)}}, std::move(product));
        }
      }
    }
  }
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) {
      TensorElement delta;
      for (ObjectIndex u = 0; u < n; ++u) delta.add({{cell(a), cell(u)}, {cell(u), cell(b)}}, Scalar(1));
      t.comul.emplace(BasisId{cell(a), cell(b)}, std::move(delta));
    }
    t.counit.emplace(BasisId{cell(a), cell(a)}, Scalar(1));
  }
  t.unit = Element(BasisId{cell(spec.p_data.unit), cell(spec.q_data.unit)});
  return AlgebraPresentation(std::move(t));
}

/// The same data with the roles of p and q exchanged; e(a;b) ↦ e(b;a) is an
/// algebra isomorphism B(p,q) → B(q,p) reversing the coproduct.
inline HallFusionSpec transposed(const HallFusionSpec& spec) {
  HallFusionSpec out = spec;
  std::swap(out.p_data, out.q_data);
  return out;
}

/// C3: T[u,v] = Σ_{a,b} P[a,b,u]·Q[a,b,v] against δ_{u,v}·d(u)·d(v). The
/// literal count δ_{u,v}·d(u) is tabulated alongside but does not set the
/// status.
inline ContractionReport check_compat_contraction(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  const auto& cat = spec.category;
  const std::size_t n = cat.size();
  std::vector<Scalar> T(n * n, Scalar(0));
  for (const auto& [pk, pv] : spec.p_data.entries) {
    for (ObjectIndex v = 0; v < n; ++v) {
      const auto qv = spec.q_data.at(pk[0], pk[1], v);
      if (qv != 0) T[pk[2] * n + v] += Scalar(static_cast<unsigned long>(pv * qv));
    }
  }
  ContractionCheck c3{"C3"};
  std::vector<TableRow> values;
  std::vector<TableRow> literal;
  bool literal_ok = true;
  for (ObjectIndex u = 0; u < n; ++u) {
    for (ObjectIndex v = 0; v < n; ++v) {
      const Scalar& value = T[u * n + v];
      const Scalar required = u == v ? cat.dim(u) * cat.dim(v) : Scalar(0);
      const Scalar literal_required = u == v ? cat.dim(u) : Scalar(0);
      if (sgn(value) != 0) values.push_back({detail::names_of(cat, {u, v}), value});
      if (sgn(literal_required) != 0) literal.push_back({detail::names_of(cat, {u, v}), literal_required});
      if (value != literal_required) literal_ok = false;
      if (value != required) c3.record(opts.witness_cap, {"T[u,v]", detail::names_of(cat, {u, v}), value, required});
    }
  }
  c3.tables.emplace_back("T", std::move(values));
  c3.tables.emplace_back("literal_required", std::move(literal));
  c3.note = std::string("literal normalization delta(u,v)*d(u): ") + (literal_ok ? "pass" : "fail");
  return {{std::move(c3)}};
}

/// C4: Σ_u P[a,b,u]·Q[c,d,u]/d(u)² = δ_{a,c}·δ_{b,d}, the coefficient form
/// of ε(xy) = ε(x)ε(y).
inline ContractionReport check_counit_contraction(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  const auto& cat = spec.category;
  const std::size_t n = cat.size();
  ContractionCheck c4{"C4"};
  std::vector<TableRow> values;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) {
      for (ObjectIndex c = 0; c < n; ++c) {
        for (ObjectIndex d = 0; d < n; ++d) {
          Scalar value = 0;
          for (ObjectIndex u = 0; u < n; ++u) {
            const auto pv = spec.p_data.at(a, b, u);
            const auto qv = pv == 0 ? 0 : spec.q_data.at(c, d, u);
            if (qv != 0) value += Scalar(static_cast<unsigned long>(pv * qv)) / (cat.dim(u) * cat.dim(u));
          }
          const Scalar required = (a == c && b == d) ? Scalar(1) : Scalar(0);
          auto key = detail::names_of(cat, {a, b, c, d});
          if (sgn(value) != 0) values.push_back({key, value});
          if (value != required) c4.record(opts.witness_cap, {"sum_u P[a,b,u]Q[c,d,u]/d(u)^2", key, value, required});
        }
      }
    }
  }
  c4.tables.emplace_back("counit", std::move(values));
  return {{std::move(c4)}};
}

/// C5: P[a,b,u] = Q[σb,σa,σu] for every triple.
inline ContractionReport check_antipode_contraction(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  detail::require_sigma(spec);
  const auto& cat = spec.category;
  const auto& s = *spec.sigma;
  const std::size_t n = cat.size();
  ContractionCheck c5{"C5"};
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b) {
      for (ObjectIndex u = 0; u < n; ++u) {
        const auto pv = spec.p_data.at(a, b, u);
        const auto qv = spec.q_data.at(s(b), s(a), s(u));
        if (pv != qv)
          c5.record(opts.witness_cap, {"P[a,b,u] vs Q[sb,sa,su]", detail::names_of(cat, {a, b, u}),
                                       Scalar(static_cast<unsigned long>(pv)), Scalar(static_cast<unsigned long>(qv))});
      }
    }
  }
  return {{std::move(c5)}};
}

struct Antipode {
  LinearEndo map;
  /// C5 status, reported but not enforced.
  ContractionCheck compatibility;
};

/// S(e(a;b)) = e(σb;σa).
inline Antipode build_antipode(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  detail::require_sigma(spec);
  const auto& s = *spec.sigma;
  const std::size_t n = spec.category.size();
  auto cell = [](ObjectIndex i) { return CellId{static_cast<std::uint32_t>(i)}; };
  Antipode out;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex b = 0; b < n; ++b)
      out.map.images.emplace(BasisId{cell(a), cell(b)}, Element(BasisId{cell(s(b)), cell(s(a))}));
  }
  out.compatibility = std::move(check_antipode_contraction(spec, opts).checks.front());
  return out;
}

/// C6: Σ_v p₃(a,σv,v;x) = δ_{a,x}·d(a) and Σ_u q₃(u,σu,b;y) = δ_{b,y}·d(b).
/// Divided by d(x)·d(y) these are the two factors of the coefficient of
/// e(x;y) in μ₃(1⊗S⊗1)Δ₃ e(a;b).
inline ContractionReport check_vn_contractions(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  detail::require_sigma(spec);
  const auto& cat = spec.category;
  const auto& s = *spec.sigma;
  const std::size_t n = cat.size();
  ContractionReport report;
  ContractionCheck c6{"C6"};
  std::vector<TableRow> p_rows;
  std::vector<TableRow> q_rows;
  for (ObjectIndex a = 0; a < n; ++a) {
    for (ObjectIndex x = 0; x < n; ++x) {
      Scalar p_sum = 0;
      Scalar q_sum = 0;
      for (ObjectIndex v = 0; v < n; ++v) {
        p_sum += compute_q3(spec.p_data, a, s(v), v, x);
        q_sum += compute_q3(spec.q_data, v, s(v), a, x);
      }
      const Scalar required = a == x ? cat.dim(a) : Scalar(0);
      auto key = detail::names_of(cat, {a, x});
      detail::check_integral(report, p_sum, "sum_v p3(" + key[0] + ",sv,v;" + key[1] + ")");
      detail::check_integral(report, q_sum, "sum_u q3(u,su," + key[0] + ";" + key[1] + ")");
      if (sgn(p_sum) != 0) p_rows.push_back({key, p_sum});
      if (sgn(q_sum) != 0) q_rows.push_back({key, q_sum});
      if (p_sum != required) c6.record(opts.witness_cap, {"sum_v p3(a,sv,v;x)", key, p_sum, required});
      if (q_sum != required) c6.record(opts.witness_cap, {"sum_u q3(u,su,b;y)", key, q_sum, required});
    }
  }
  c6.tables.emplace_back("p_side", std::move(p_rows));
  c6.tables.emplace_back("q_side", std::move(q_rows));
  report.checks.push_back(std::move(c6));
  return report;
}

/// C1–C6 for a full spec; C5/C6 are skipped when no valid σ is given.
inline ContractionReport contraction_report(const HallFusionSpec& spec, const ContractionOptions& opts = {}) {
  detail::require_shared_base(spec);
  ContractionReport report = validate_promonoidal(spec.p_data, "p", opts);
  report.append(validate_promonoidal(spec.q_data, "q", opts));
  report.append(check_compat_contraction(spec, opts));
  report.append(check_counit_contraction(spec, opts));
  bool sigma_ok = spec.sigma.has_value();
  std::string why = "no antipode map";
  if (sigma_ok) {
    try {
      detail::require_sigma(spec);
    } catch (const Error& e) {
      sigma_ok = false;
      why = e.what();
    }
  }
  if (sigma_ok) {
    report.append(check_antipode_contraction(spec, opts));
    report.append(check_vn_contractions(spec, opts));
  } else {
    report.checks.push_back({"C5", Status::skip, {}, 0, {}, why});
    report.checks.push_back({"C6", Status::skip, {}, 0, {}, why});
  }
  return report;
}

}  // namespace hfx
