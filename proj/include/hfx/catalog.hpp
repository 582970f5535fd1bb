#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hfx/hallfusion.hpp"
#include "hfx/suite.hpp"

namespace hfx {

struct CatalogEntry {
  std::string name;
  Model model;
  /// axiom-id → expected status, covering every id the suite emits.
  std::map<std::string, Status> expected;
};

/// Group table with cayley[a][b] = index of a·b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Discrete groupoid linearisation: one object per element, d = 1,
/// P = Q = δ_{u,ab}, I = J = identity, σ = inversion.
inline HallFusionSpec gen_group_delta(const CayleyTable& cayley) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error(ErrorCode::group, "empty group table");
  for (const auto& row : cayley) {
    if (row.size() != n) throw Error(ErrorCode::group, "group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw Error(ErrorCode::group, "group table is not closed");
    }
  }
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorCode::group, "group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) throw Error(ErrorCode::group, "group table is not associative");
      }
    }
  }
  AntipodeMap sigma;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t inv = n;
    for (std::size_t b = 0; b < n; ++b) {
      if (cayley[a][b] == identity && cayley[b][a] == identity) inv = b;
    }
    if (inv == n) throw Error(ErrorCode::group, "element " + std::to_string(a) + " has no inverse");
    sigma.image.push_back(inv);
  }
  DimCategory cat;
  for (std::size_t a = 0; a < n; ++a) {
    cat.objects.push_back(std::to_string(a));
    cat.dims.push_back(1);
  }
  PromonoidalDimData data{cat, {}, identity};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) data.entries[{a, b, cayley[a][b]}] = 1;
  }
  return {cat, data, data, sigma};
}

/// Cyclic group Z_n under addition.
inline CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

/// One object * with dim A(*,*) = m and P = Q = m.
inline HallFusionSpec gen_endo_group(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::range, "endomorphism dimension must be positive");
  DimCategory cat{{"*"}, {m}};
  PromonoidalDimData data{cat, {{{0, 0, 0}, m}}, 0};
  return {cat, data, data, AntipodeMap{{0}}};
}

struct FusionTable {
  std::vector<std::string> names;
  std::map<Triple, std::uint64_t> coefficients;  // N_{ab}^c at {a, b, c}
  ObjectIndex unit = 0;
  std::vector<ObjectIndex> duality;
};

/// Fusion-rule data with d = 1 everywhere. The unit row and column must
/// satisfy N_{1b}^c = N_{b1}^c = δ_{b,c}; associativity is left to the audits.
inline HallFusionSpec gen_fusion_ring(const FusionTable& table) {
  DimCategory cat{table.names, std::vector<std::uint64_t>(table.names.size(), 1)};
  cat.validate();
  PromonoidalDimData data{cat, {}, table.unit};
  for (const auto& [k, v] : table.coefficients) data.set(k[0], k[1], k[2], v);
  data.validate();
  const std::size_t n = cat.size();
  for (ObjectIndex b = 0; b < n; ++b) {
    for (ObjectIndex c = 0; c < n; ++c) {
      const std::uint64_t want = b == c ? 1 : 0;
      if (data.at(table.unit, b, c) != want || data.at(b, table.unit, c) != want)
        throw Error(ErrorCode::unit, "unit row/column of the fusion table is not the identity at (" + table.names[b] +
                                         "," + table.names[c] + ")");
    }
  }
  return {cat, data, data, AntipodeMap{table.duality}};
}

inline FusionTable fibonacci_table() {
  // I, x with x·x = I + x
  return {{"I", "x"}, {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}, {{1, 1, 1}, 1}}, 0, {0, 1}};
}

inline FusionTable ising_table() {
  // 1, eps, sig with sig·sig = 1 + eps, eps·eps = 1, sig·eps = eps·sig = sig
  return {{"1", "eps", "sig"},
          {{{0, 0, 0}, 1},
           {{0, 1, 1}, 1},
           {{1, 0, 1}, 1},
           {{0, 2, 2}, 1},
           {{2, 0, 2}, 1},
           {{1, 1, 0}, 1},
           {{1, 2, 2}, 1},
           {{2, 1, 2}, 1},
           {{2, 2, 0}, 1},
           {{2, 2, 1}, 1}},
          0,
          {0, 1, 2}};
}

inline GraphModel graph_two_vertex(unsigned max_degree = 3) {
  // loop a at 1, edge b: 1 → 2
  return {{{"1", "2"}, {{"a", 0, 0}, {"b", 0, 1}}}, max_degree};
}

inline GraphModel graph_one_loop(unsigned max_degree = 3) {
  return {{{"v"}, {{"x", 0, 0}}}, max_degree};
}

namespace detail {

// Pinned expectation matrices. Only failing ids are listed; every other id
// the suite emits for that entry is expected to pass.
struct Expectation {
  std::string_view name;
  std::string_view failing;
};

inline constexpr std::string_view vertex_ids =
    "assoc unit coassoc counit delta_mult eps_mult delta_unit weak_unit eps_mult_weak "
    "antihom antipode_unit antipode_involution von_neumann C1 C2 C3 C4 C5 C6";
inline constexpr std::string_view face_ids =
    "assoc unit coassoc counit delta_mult eps_mult delta_unit weak_unit eps_mult_weak "
    "vacuum_orth face_idempotents face_unit_sum C2";

inline constexpr std::array<Expectation, 9> expectations{{
    {"trivial", ""},
    {"z2-delta", "delta_mult eps_mult delta_unit von_neumann C3 C4 C6"},
    {"z3-delta", "delta_mult eps_mult delta_unit von_neumann C3 C4 C6"},
    {"z2-endo", ""},
    {"z3-endo", ""},
    {"fibonacci", "delta_mult eps_mult delta_unit von_neumann C3 C4 C6"},
    {"ising", "delta_mult eps_mult delta_unit von_neumann C3 C4 C6"},
    {"graph-2v", "eps_mult delta_unit"},
    {"graph-1loop", ""},
}};

inline std::map<std::string, Status> expectation_matrix(std::string_view ids, std::string_view failing) {
  std::map<std::string, Status> out;
  std::istringstream all{std::string(ids)};
  for (std::string id; all >> id;) out[id] = Status::pass;
  std::istringstream bad{std::string(failing)};
  for (std::string id; bad >> id;) out[id] = Status::fail;
  return out;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::expectations) out.emplace_back(e.name);
  return out;
}

inline CatalogEntry catalog_get(std::string_view name) {
  const detail::Expectation* exp = nullptr;
  for (const auto& e : detail::expectations) {
    if (e.name == name) exp = &e;
  }
  if (exp == nullptr) throw Error(ErrorCode::name, "no catalog entry named '" + std::string(name) + "'");

  Model model;
  if (name == "trivial") {
    model = gen_endo_group(1);
  } else if (name == "z2-delta") {
    model = gen_group_delta(cyclic_table(2));
  } else if (name == "z3-delta") {
    model = gen_group_delta(cyclic_table(3));
  } else if (name == "z2-endo") {
    model = gen_endo_group(2);
  } else if (name == "z3-endo") {
    model = gen_endo_group(3);
  } else if (name == "fibonacci") {
    model = gen_fusion_ring(fibonacci_table());
  } else if (name == "ising") {
    model = gen_fusion_ring(ising_table());
  } else if (name == "graph-2v") {
    model = graph_two_vertex();
  } else {
    model = graph_one_loop();
  }
  const bool vertex = std::holds_alternative<HallFusionSpec>(model);
  return {std::string(name), std::move(model),
          detail::expectation_matrix(vertex ? detail::vertex_ids : detail::face_ids, exp->failing)};
}

}  // namespace hfx
