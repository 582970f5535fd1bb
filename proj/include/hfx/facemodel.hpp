#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfx/audit.hpp"
#include "hfx/hallfusion.hpp"

namespace hfx {

using ZeroCell = std::size_t;

/// A 1-cell of A_ij. Degree 0 is reserved for the vacuum identities that
/// build_face_algebra adjoins itself.
struct OneCell {
  std::string name;
  ZeroCell src = 0;
  ZeroCell dst = 0;
  unsigned deg = 1;
  std::uint64_t dim = 1;

  friend bool operator==(const OneCell&, const OneCell&) = default;
};

/// Dimension data of two procategory structures (A_ij, p_ijk), (A_ij^op, q_ijk)
/// over the same 0-cells. Tensor indices are positions in `cells`.
struct ProcategoryDimData {
  std::vector<std::string> zero_cells;
  std::vector<OneCell> cells;
  std::map<Triple, std::uint64_t> p;
  std::map<Triple, std::uint64_t> q;

  [[nodiscard]] std::size_t cell_index(std::string_view name) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].name == name) return i;
    }
    throw Error(ErrorCode::index, "undeclared 1-cell '" + std::string(name) + "'");
  }

  [[nodiscard]] ZeroCell zero_cell_index(std::string_view name) const {
    auto it = std::find(zero_cells.begin(), zero_cells.end(), name);
    if (it == zero_cells.end()) throw Error(ErrorCode::index, "undeclared 0-cell '" + std::string(name) + "'");
    return static_cast<ZeroCell>(it - zero_cells.begin());
  }

  void validate() const {
    std::set<std::string_view> names;
    for (const auto& z : zero_cells) {
      if (!names.insert(z).second) throw Error(ErrorCode::cell, "duplicate 0-cell '" + z + "'");
    }
    for (const auto& c : cells) {
      if (!names.insert(c.name).second) throw Error(ErrorCode::cell, "cell name '" + c.name + "' is not unique");
      if (c.src >= zero_cells.size() || c.dst >= zero_cells.size())
        throw Error(ErrorCode::cell, "1-cell '" + c.name + "' has an undeclared endpoint");
      if (c.deg == 0) throw Error(ErrorCode::cell, "1-cell '" + c.name + "' has degree 0 (reserved for vacuums)");
      if (c.dim == 0) throw Error(ErrorCode::cell, "1-cell '" + c.name + "' has dimension 0");
    }
    for (const auto* table : {&p, &q}) {
      for (const auto& [k, v] : *table) {
        if (k[0] >= cells.size() || k[1] >= cells.size() || k[2] >= cells.size())
          throw Error(ErrorCode::cell, "tensor entry refers to an undeclared 1-cell");
        const auto& a = cells[k[0]];
        const auto& b = cells[k[1]];
        const auto& u = cells[k[2]];
        if (a.dst != b.src || u.src != a.src || u.dst != b.dst)
          throw Error(ErrorCode::cell, "entry (" + a.name + "," + b.name + "," + u.name + ") is not composable");
        if (u.deg != a.deg + b.deg)
          throw Error(ErrorCode::cell, "entry (" + a.name + "," + b.name + "," + u.name + ") is not degree-additive");
      }
    }
  }

  friend bool operator==(const ProcategoryDimData&, const ProcategoryDimData&) = default;
};

struct DirectedGraph {
  struct Edge {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  void validate() const {
    std::set<std::string_view> names;
    for (const auto& v : vertices) {
      if (!names.insert(v).second) throw Error(ErrorCode::cell, "duplicate vertex '" + v + "'");
    }
    std::set<std::string_view> edge_names;
    for (const auto& e : edges) {
      if (!edge_names.insert(e.name).second) throw Error(ErrorCode::cell, "duplicate edge '" + e.name + "'");
      if (e.src >= vertices.size() || e.dst >= vertices.size())
        throw Error(ErrorCode::index, "edge '" + e.name + "' has an undeclared endpoint");
    }
  }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

/// Face model of a graph: 1-cells are the paths of length 1..max_degree
/// (d = 1), and P = Q = 1 exactly on (p, q, pq) when pq stays within the cap.
/// Path names concatenate edge names, dot-separated unless every edge name is
/// a single character.
inline ProcategoryDimData graph_to_procategory(const DirectedGraph& g, unsigned max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::range, "max degree must be at least 1");
  g.validate();
  const bool short_names =
      std::all_of(g.edges.begin(), g.edges.end(), [](const DirectedGraph::Edge& e) { return e.name.size() == 1; });

  struct Path {
    std::vector<std::size_t> edges;
    std::size_t src;
    std::size_t dst;
  };
  std::vector<Path> paths;
  std::vector<std::size_t> frontier;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    frontier.push_back(paths.size());
    paths.push_back({{e}, g.edges[e].src, g.edges[e].dst});
  }
  for (unsigned len = 2; len <= max_degree; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t pi : frontier) {
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].src != paths[pi].dst) continue;
        Path extended = paths[pi];
        extended.edges.push_back(e);
        extended.dst = g.edges[e].dst;
        next.push_back(paths.size());
        paths.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }

  ProcategoryDimData pc;
  pc.zero_cells = g.vertices;
  std::map<std::vector<std::size_t>, std::size_t> by_edges;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::string name;
    for (std::size_t k = 0; k < paths[i].edges.size(); ++k) {
      if (k > 0 && !short_names) name += '.';
      name += g.edges[paths[i].edges[k]].name;
    }
    pc.cells.push_back({name, paths[i].src, paths[i].dst, static_cast<unsigned>(paths[i].edges.size()), 1});
    by_edges.emplace(paths[i].edges, i);
  }
  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = 0; b < paths.size(); ++b) {
      if (paths[a].dst != paths[b].src) continue;
      std::vector<std::size_t> joined = paths[a].edges;
      joined.insert(joined.end(), paths[b].edges.begin(), paths[b].edges.end());
      auto it = by_edges.find(joined);
      if (it == by_edges.end()) continue;
      pc.p[{a, b, it->second}] = 1;
      pc.q[{a, b, it->second}] = 1;
    }
  }
  return pc;
}

/// Graded face algebra. Cells 0..|N|-1 are the vacuums (named after the
/// 0-cells), followed by the 1-cells in declaration order. Products whose
/// degree exceeds max_degree are cut to zero.
inline AlgebraPresentation build_face_algebra(const ProcategoryDimData& pc, unsigned max_degree) {
  pc.validate();
  const std::size_t nz = pc.zero_cells.size();
  const std::size_t nc = pc.cells.size();
  auto vac = [](std::size_t i) { return CellId{static_cast<std::uint32_t>(i)}; };
  auto one = [nz](std::size_t c) { return CellId{static_cast<std::uint32_t>(nz + c)}; };

  PresentationTables t;
  t.cell_names = pc.zero_cells;
  for (const auto& c : pc.cells) t.cell_names.push_back(c.name);
  t.max_degree = max_degree;
  t.degree.emplace();
  for (std::size_t i = 0; i < nz; ++i) t.vacuum_cells.push_back(vac(i));

  std::vector<std::vector<std::size_t>> by_degree(max_degree + 1);
  for (std::size_t c = 0; c < nc; ++c) {
    if (pc.cells[c].deg <= max_degree) by_degree[pc.cells[c].deg].push_back(c);
  }
  for (std::size_t i = 0; i < nz; ++i) {
    for (std::size_t j = 0; j < nz; ++j) {
      t.basis.push_back({vac(i), vac(j)});
      (*t.degree)[{vac(i), vac(j)}] = 0;
    }
  }
  for (unsigned n = 1; n <= max_degree; ++n) {
    for (std::size_t a : by_degree[n]) {
      for (std::size_t b : by_degree[n]) {
        t.basis.push_back({one(a), one(b)});
        (*t.degree)[{one(a), one(b)}] = n;
      }
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::uint64_t>>> p_rows;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::uint64_t>>> q_rows;
  for (const auto& [k, v] : pc.p) {
    if (v != 0 && pc.cells[k[2]].deg <= max_degree) p_rows[{k[0], k[1]}].emplace_back(k[2], v);
  }
  for (const auto& [k, v] : pc.q) {
    if (v != 0 && pc.cells[k[2]].deg <= max_degree) q_rows[{k[0], k[1]}].emplace_back(k[2], v);
  }

  const auto& basis = t.basis;
  auto is_vacuum = [nz](CellId c) { return c.value < nz; };
  auto src = [&](CellId c) { return is_vacuum(c) ? c.value : pc.cells[c.value - nz].src; };
  auto dst = [&](CellId c) { return is_vacuum(c) ? c.value : pc.cells[c.value - nz].dst; };
  for (const BasisId& x : basis) {
    for (const BasisId& y : basis) {
      if (dst(x.upper) != src(y.upper) || dst(x.lower) != src(y.lower)) continue;
      const bool vx = is_vacuum(x.upper);
      const bool vy = is_vacuum(y.upper);
      Element product;
      if (vx && vy) {
        if (x == y) product = Element(x);
      } else if (vx) {
        product = Element(y);
      } else if (vy) {
        product = Element(x);
      } else {
        auto pr = p_rows.find({x.upper.value - nz, y.upper.value - nz});
        auto qr = q_rows.find({x.lower.value - nz, y.lower.value - nz});
        if (pr == p_rows.end() || qr == q_rows.end()) continue;
        for (const auto& [u, pv] : pr->second) {
          for (const auto& [v, qv] : qr->second) {
            Scalar coeff(static_cast<unsigned long>(pv * qv));
            coeff /= Scalar(static_cast<unsigned long>(pc.cells[u].dim * pc.cells[v].dim));
            product.add({one(u), one(v)}, coeff);
          }
        }
      }
      if (!product.is_zero()) t.mul.emplace(BasisPair{x, y}, std::move(product));
    }
  }

  for (std::size_t i = 0; i < nz; ++i) {
    for (std::size_t j = 0; j < nz; ++j) t.unit.add({vac(i), vac(j)}, Scalar(1));
  }
  for (const BasisId& x : basis) {
    TensorElement delta;
    if (is_vacuum(x.upper)) {
      for (std::size_t k = 0; k < nz; ++k) delta.add({{x.upper, vac(k)}, {vac(k), x.lower}}, Scalar(1));
    } else {
      for (std::size_t u : by_degree[pc.cells[x.upper.value - nz].deg])
        delta.add({{x.upper, one(u)}, {one(u), x.lower}}, Scalar(1));
    }
    t.comul.emplace(x, std::move(delta));
    if (x.upper == x.lower) t.counit.emplace(x, Scalar(1));
  }
  return AlgebraPresentation(std::move(t));
}

struct FaceIdempotents {
  std::map<std::string, Element> row;     // ė_i = Σ_j e(i;j)
  std::map<std::string, Element> column;  // e_j = Σ_i e(i;j)
};

inline FaceIdempotents face_idempotents(const AlgebraPresentation& alg, const ProcategoryDimData& pc) {
  if (alg.vacuum_cells().size() != pc.zero_cells.size())
    throw Error(ErrorCode::mismatch, "algebra was not built from this procategory");
  FaceIdempotents out;
  for (std::size_t i = 0; i < pc.zero_cells.size(); ++i) {
    out.row.emplace(pc.zero_cells[i], row_idempotent(alg, alg.vacuum_cells()[i]));
    out.column.emplace(pc.zero_cells[i], column_idempotent(alg, alg.vacuum_cells()[i]));
  }
  return out;
}

/// Algebra, coalgebra and compatibility audits (truncated tuples skipped and
/// counted), then vacuum orthogonality, idempotent laws and Σ ė_i = 1.
inline AuditReport audit_face(const AlgebraPresentation& alg, const ProcategoryDimData& pc,
                              const AuditOptions& opts = {}) {
  if (alg.vacuum_cells().size() != pc.zero_cells.size())
    throw Error(ErrorCode::mismatch, "algebra was not built from this procategory");
  AuditReport report = audit_algebra(alg, opts);
  report.append(audit_coalgebra(alg, opts));
  report.append(audit_bialgebra_compat(alg, opts));
  report.entries.push_back(run_axiom(alg, axiom::vacuum_orth, opts));
  report.entries.push_back(run_axiom(alg, axiom::face_idempotents, opts));
  report.entries.push_back(run_axiom(alg, axiom::face_unit_sum, opts));
  return report;
}

/// Associativity shadow (C2) of p and q over composable 1-cell triples.
inline ContractionReport validate_procategory(const ProcategoryDimData& pc, const ContractionOptions& opts = {}) {
  pc.validate();
  ContractionReport report;
  ContractionCheck c2{"C2"};
  using Quad = std::array<std::size_t, 4>;
  for (const auto& [tag, table] : {std::pair{std::string("p"), &pc.p}, std::pair{std::string("q"), &pc.q}}) {
    std::map<std::size_t, std::vector<std::pair<Triple, std::uint64_t>>> by_first;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::uint64_t>>> by_pair;
    for (const auto& [k, v] : *table) {
      if (v == 0) continue;
      by_first[k[0]].push_back({k, v});
      by_pair[{k[0], k[1]}].emplace_back(k[2], v);
    }
    std::map<Quad, Scalar> left;
    std::map<Quad, Scalar> right;
    for (const auto& [k, v] : *table) {
      if (v == 0) continue;
      const Scalar dw(static_cast<unsigned long>(pc.cells[k[2]].dim));
      // left: T[a,b,w]·T[w,c,e]
      if (auto it = by_first.find(k[2]); it != by_first.end()) {
        for (const auto& [k2, v2] : it->second)
          left[{k[0], k[1], k2[1], k2[2]}] += Scalar(static_cast<unsigned long>(v * v2)) / dw;
      }
      // right: T[b,c,w]·T[a,w,e] with (b,c,w) = k
      for (std::size_t a = 0; a < pc.cells.size(); ++a) {
        auto it = by_pair.find({a, k[2]});
        if (it == by_pair.end()) continue;
        for (const auto& [e, v2] : it->second)
          right[{a, k[0], k[1], e}] += Scalar(static_cast<unsigned long>(v * v2)) / dw;
      }
    }
    std::set<Quad> keys;
    for (const auto& [k, v] : left) keys.insert(k);
    for (const auto& [k, v] : right) keys.insert(k);
    for (const Quad& k : keys) {
      const Scalar l = left.contains(k) ? left.at(k) : Scalar(0);
      const Scalar r = right.contains(k) ? right.at(k) : Scalar(0);
      if (l != r) {
        c2.record(opts.witness_cap, {tag + "3 bracketings",
                                     {pc.cells[k[0]].name, pc.cells[k[1]].name, pc.cells[k[2]].name, pc.cells[k[3]].name},
                                     l, r});
      }
      detail::check_integral(report, l, tag + "3");
    }
  }
  report.checks.push_back(std::move(c2));
  return report;
}

}  // namespace hfx
