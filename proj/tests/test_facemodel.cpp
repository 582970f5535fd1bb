#include <gtest/gtest.h>

#include <set>

#include "hfx/hfx.hpp"

using namespace hfx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::name;
}

std::vector<std::string> cell_names(const ProcategoryDimData& pc) {
  std::vector<std::string> out;
  for (const auto& c : pc.cells) out.push_back(c.name);
  return out;
}

std::set<std::array<std::string, 3>> support(const ProcategoryDimData& pc, const std::map<Triple, std::uint64_t>& t) {
  std::set<std::array<std::string, 3>> out;
  for (const auto& [k, v] : t) {
    EXPECT_EQ(v, 1U);
    out.insert({pc.cells[k[0]].name, pc.cells[k[1]].name, pc.cells[k[2]].name});
  }
  return out;
}

std::map<unsigned, std::size_t> degree_dims(const AlgebraPresentation& alg) {
  std::map<unsigned, std::size_t> out;
  for (const auto& b : alg.basis()) ++out[alg.degree_of(b)];
  return out;
}

struct Built {
  ProcategoryDimData pc;
  AlgebraPresentation alg;
};

Built build(const GraphModel& g) {
  auto pc = graph_to_procategory(g.graph, g.max_degree);
  auto alg = build_face_algebra(pc, g.max_degree);
  return {std::move(pc), std::move(alg)};
}

}  // namespace

TEST(GraphToProcategory, TwoVertex) {
  const auto pc = graph_to_procategory(graph_two_vertex().graph, 2);
  EXPECT_EQ(cell_names(pc), (std::vector<std::string>{"a", "b", "aa", "ab"}));
  using S = std::set<std::array<std::string, 3>>;
  EXPECT_EQ(support(pc, pc.p), (S{{"a", "a", "aa"}, {"a", "b", "ab"}}));
  EXPECT_EQ(pc.p, pc.q);
  for (const auto& c : pc.cells) EXPECT_EQ(c.dim, 1U);
}

TEST(GraphToProcategory, OneLoop) {
  const auto pc = graph_to_procategory(graph_one_loop().graph, 3);
  EXPECT_EQ(cell_names(pc), (std::vector<std::string>{"x", "xx", "xxx"}));
  using S = std::set<std::array<std::string, 3>>;
  EXPECT_EQ(support(pc, pc.p), (S{{"x", "x", "xx"}, {"x", "xx", "xxx"}, {"xx", "x", "xxx"}}));
}

TEST(GraphToProcategory, LongEdgeNamesAreSeparated) {
  DirectedGraph g{{"v"}, {{"up", 0, 0}}};
  EXPECT_EQ(cell_names(graph_to_procategory(g, 2)), (std::vector<std::string>{"up", "up.up"}));
}

TEST(GraphToProcategory, EmptyGraph) {
  DirectedGraph g{{"p", "q"}, {}};
  const auto pc = graph_to_procategory(g, 2);
  EXPECT_TRUE(pc.cells.empty());
  EXPECT_TRUE(pc.p.empty());
  const auto alg = build_face_algebra(pc, 2);
  EXPECT_EQ(alg.basis().size(), 4U);
  EXPECT_EQ(alg.unit().size(), 4U);
  const BasisId pq = alg.basis_id("p", "q");
  TensorElement expected;
  expected.add({alg.basis_id("p", "p"), pq}, 1);
  expected.add({pq, alg.basis_id("q", "q")}, 1);
  EXPECT_EQ(comultiply(Element(pq), alg), expected);
  const auto r = audit_face(alg, pc);
  for (const auto& e : r.entries) {
    const bool strict_only = e.id == "eps_mult" || e.id == "delta_unit";
    EXPECT_EQ(e.status, strict_only ? Status::fail : Status::pass) << e.id;
  }

  DirectedGraph point{{"p"}, {}};
  const auto pc1 = graph_to_procategory(point, 1);
  EXPECT_TRUE(audit_face(build_face_algebra(pc1, 1), pc1).all_pass());
}

TEST(GraphToProcategory, Errors) {
  EXPECT_EQ(code_of([] { (void)graph_to_procategory(graph_one_loop().graph, 0); }), ErrorCode::range);
  DirectedGraph dup{{"v", "v"}, {}};
  EXPECT_ANY_THROW((void)graph_to_procategory(dup, 1));
}

TEST(BuildFaceAlgebra, TwoVertexProducts) {
  const auto [pc, alg] = build(graph_two_vertex(2));
  EXPECT_EQ(degree_dims(alg), (std::map<unsigned, std::size_t>{{0, 4}, {1, 4}, {2, 4}}));
  auto e = [&](const char* a, const char* b) { return alg.basis_id(a, b); };
  EXPECT_EQ(multiply(e("a", "a"), e("b", "b"), alg), Element(e("ab", "ab")));
  EXPECT_TRUE(multiply(e("a", "b"), e("b", "b"), alg).is_zero());
  EXPECT_EQ(multiply(e("a", "a"), e("a", "b"), alg), Element(e("aa", "ab")));
  // degree 3 is past the cap
  EXPECT_TRUE(multiply(e("a", "a"), e("aa", "aa"), alg).is_zero());
  EXPECT_TRUE(alg.truncation_affected(std::vector<BasisId>{e("a", "a"), e("aa", "aa")}));
  EXPECT_FALSE(alg.truncation_affected(std::vector<BasisId>{e("a", "a"), e("a", "a")}));
}

TEST(BuildFaceAlgebra, VacuumIdentityLaws) {
  const auto [pc, alg] = build(graph_two_vertex(2));
  auto e = [&](const char* a, const char* b) { return alg.basis_id(a, b); };
  EXPECT_EQ(multiply(e("1", "1"), e("a", "b"), alg), Element(e("a", "b")));
  EXPECT_TRUE(multiply(e("1", "2"), e("a", "b"), alg).is_zero());
  EXPECT_EQ(multiply(e("a", "b"), e("1", "2"), alg), Element(e("a", "b")));
  EXPECT_EQ(multiply(e("1", "2"), e("1", "2"), alg), Element(e("1", "2")));
  EXPECT_TRUE(multiply(e("1", "2"), e("2", "1"), alg).is_zero());
}

TEST(BuildFaceAlgebra, OneLoopCoproduct) {
  const auto [pc, alg] = build(graph_one_loop());
  const BasisId xx = alg.basis_id("xx", "xx");
  EXPECT_EQ(comultiply(Element(xx), alg), TensorElement({xx, xx}));
  EXPECT_EQ(degree_dims(alg), (std::map<unsigned, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST(BuildFaceAlgebra, DividesByCellDimensions) {
  ProcategoryDimData pc;
  pc.zero_cells = {"*"};
  pc.cells = {{"a", 0, 0, 1, 2}, {"b", 0, 0, 2, 3}};
  pc.p[{0, 0, 1}] = 2;
  pc.q[{0, 0, 1}] = 1;
  const auto alg = build_face_algebra(pc, 2);
  EXPECT_EQ(multiply(alg.basis_id("a", "a"), alg.basis_id("a", "a"), alg),
            Element(alg.basis_id("b", "b"), make_scalar(2, 9)));
}

TEST(BuildFaceAlgebra, CellErrors) {
  ProcategoryDimData pc;
  pc.zero_cells = {"1", "2"};
  pc.cells = {{"a", 0, 1, 1, 1}, {"aa", 0, 1, 2, 1}};
  pc.p[{0, 0, 1}] = 1;  // a·a is not composable
  EXPECT_EQ(code_of([&] { (void)build_face_algebra(pc, 2); }), ErrorCode::cell);

  ProcategoryDimData zero_deg;
  zero_deg.zero_cells = {"*"};
  zero_deg.cells = {{"z", 0, 0, 0, 1}};
  EXPECT_EQ(code_of([&] { (void)build_face_algebra(zero_deg, 1); }), ErrorCode::cell);

  ProcategoryDimData not_additive;
  not_additive.zero_cells = {"*"};
  not_additive.cells = {{"a", 0, 0, 1, 1}};
  not_additive.p[{0, 0, 0}] = 1;
  EXPECT_EQ(code_of([&] { (void)build_face_algebra(not_additive, 2); }), ErrorCode::cell);

  ProcategoryDimData clash;
  clash.zero_cells = {"a"};
  clash.cells = {{"a", 0, 0, 1, 1}};
  EXPECT_EQ(code_of([&] { (void)build_face_algebra(clash, 1); }), ErrorCode::cell);
}

TEST(FaceIdempotents, TwoVertex) {
  const auto [pc, alg] = build(graph_two_vertex());
  const auto f = face_idempotents(alg, pc);
  Element row1;
  row1.add(alg.basis_id("1", "1"), 1);
  row1.add(alg.basis_id("1", "2"), 1);
  EXPECT_EQ(f.row.at("1"), row1);
  const Element ab(alg.basis_id("a", "b"));
  EXPECT_EQ(multiply(f.row.at("1"), ab, alg), ab);
  EXPECT_TRUE(multiply(f.row.at("2"), ab, alg).is_zero());
  Element rows;
  Element cols;
  for (const auto& [k, v] : f.row) rows += v;
  for (const auto& [k, v] : f.column) cols += v;
  EXPECT_EQ(rows, alg.unit());
  EXPECT_EQ(cols, alg.unit());
}

TEST(AuditFace, TwoVertex) {
  const auto [pc, alg] = build(graph_two_vertex(3));
  const auto r = audit_face(alg, pc);
  for (auto id : {"assoc", "unit", "coassoc", "counit", "delta_mult", "eps_mult_weak", "weak_unit", "vacuum_orth",
                  "face_idempotents", "face_unit_sum"})
    EXPECT_EQ(r.status(id), Status::pass) << id;
  EXPECT_EQ(r.status("delta_unit"), Status::fail);
  // strict ε(xy) = ε(x)ε(y) breaks on pairs that do not compose
  ASSERT_EQ(r.status("eps_mult"), Status::fail);
  const auto& w = r.find("eps_mult")->witnesses.front();
  EXPECT_EQ(w.inputs.size(), 2U);
  EXPECT_TRUE(multiply(w.inputs[0], w.inputs[1], alg).is_zero());
  EXPECT_GT(r.find("assoc")->truncated, 0U);
}

TEST(AuditFace, OneLoopPassesEverything) {
  const auto [pc, alg] = build(graph_one_loop());
  const auto r = audit_face(alg, pc);
  EXPECT_TRUE(r.all_pass());
  EXPECT_GT(r.find("assoc")->truncated, 0U);
  EXPECT_EQ(r.find("counit")->truncated, 0U);
}

TEST(AuditFace, RejectsForeignAlgebra) {
  const auto [pc, alg] = build(graph_two_vertex());
  const auto other = build(graph_one_loop());
  EXPECT_EQ(code_of([&] { (void)audit_face(other.alg, pc); }), ErrorCode::mismatch);
}

TEST(FaceInvariants, GradingAndStructureConstants) {
  for (const auto& g : {graph_two_vertex(3), graph_one_loop(3), GraphModel{{{"u", "v", "w"},
                                                                               {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}, {"d", 1, 1}}},
                                                                              3}}) {
    const auto [pc, alg] = build(g);
    std::map<unsigned, std::size_t> paths;
    for (const auto& c : pc.cells) ++paths[c.deg];
    for (const auto& [deg, count] : degree_dims(alg)) {
      const std::size_t expected = deg == 0 ? g.graph.vertices.size() : paths[deg];
      EXPECT_EQ(count, expected * expected);
    }
    for (const auto& x : alg.basis()) {
      for (const auto& y : alg.basis()) {
        const Element xy = multiply(x, y, alg);
        EXPECT_LE(xy.size(), 1U);
        for (const auto& [k, c] : xy) {
          EXPECT_EQ(c, 1);
          EXPECT_EQ(alg.degree_of(k), alg.degree_of(x) + alg.degree_of(y));
        }
      }
      for (const auto& [k, c] : comultiply(Element(x), alg)) {
        EXPECT_EQ(c, 1);
        EXPECT_EQ(alg.degree_of(k.first), alg.degree_of(x));
        EXPECT_EQ(alg.degree_of(k.second), alg.degree_of(x));
      }
    }
    EXPECT_EQ(validate_procategory(pc).status("C2"), Status::pass);
  }
}

TEST(FaceInvariants, SingleZeroCellMatchesVertexBuild) {
  // one 0-cell: the vacuum plays the unit object of a vertex-model category
  const auto [pc, face] = build(graph_one_loop(3));
  DimCategory cat{{"v"}, {1}};
  for (const auto& c : pc.cells) {
    cat.objects.push_back(c.name);
    cat.dims.push_back(c.dim);
  }
  PromonoidalDimData p{cat, {}, 0};
  PromonoidalDimData q{cat, {}, 0};
  for (ObjectIndex b = 0; b < cat.size(); ++b) {
    p.set(0, b, b, 1);
    p.set(b, 0, b, 1);
    q.set(0, b, b, 1);
    q.set(b, 0, b, 1);
  }
  for (const auto& [k, v] : pc.p) p.set(k[0] + 1, k[1] + 1, k[2] + 1, v);
  for (const auto& [k, v] : pc.q) q.set(k[0] + 1, k[1] + 1, k[2] + 1, v);
  const auto vertex = build_hall_fusion({cat, p, q, std::nullopt});

  ASSERT_EQ(vertex.unit(), face.unit());
  const auto& vac = face.vacuum_cells();
  std::vector<BasisId> cells;
  for (const auto& b : face.basis()) {
    if (std::find(vac.begin(), vac.end(), b.upper) == vac.end()) cells.push_back(b);
  }
  for (const auto& x : cells) {
    for (const auto& y : cells) {
      EXPECT_EQ(multiply(x, y, face), multiply(x, y, vertex));
      for (const auto& z : cells) {
        const std::array<BasisId, 3> t{x, y, z};
        if (face.truncation_affected(t)) continue;
        EXPECT_EQ(evaluate_axiom(face, axiom::assoc, t), evaluate_axiom(vertex, axiom::assoc, t));
      }
    }
    const std::array<BasisId, 1> one{x};
    EXPECT_EQ(evaluate_axiom(face, axiom::unit, one), evaluate_axiom(vertex, axiom::unit, one));
  }
}

TEST(ValidateProcategory, DetectsBracketingMismatch) {
  auto pc = graph_to_procategory(graph_one_loop().graph, 3);
  pc.p[{0, 1, 2}] = 2;  // (x,xx,xxx) doubled
  const auto r = validate_procategory(pc);
  ASSERT_EQ(r.status("C2"), Status::fail);
  EXPECT_EQ(r.find("C2")->witnesses.front().key, (std::vector<std::string>{"x", "x", "x", "xxx"}));
}
