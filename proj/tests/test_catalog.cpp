#include <gtest/gtest.h>

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

CayleyTable klein_table() {
  CayleyTable t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return t;
}

}  // namespace

class CatalogEntries : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogEntries, MatchesExpectations) {
  const auto entry = catalog_get(GetParam());
  const auto result = run_suite(entry.model);
  EXPECT_EQ(result.statuses(), entry.expected);
  for (const auto& e : result.audits.entries) {
    if (e.status == Status::fail) {
      ASSERT_FALSE(e.witnesses.empty()) << e.id;
      for (const auto& w : e.witnesses) {
        EXPECT_TRUE(replay_witness(result.algebra, e.id, w, result.antipode ? &*result.antipode : nullptr)) << e.id;
      }
    } else {
      EXPECT_TRUE(e.witnesses.empty()) << e.id;
    }
  }
  for (const auto& c : result.contractions.checks) {
    EXPECT_EQ(c.status == Status::fail, !c.witnesses.empty()) << c.id;
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogEntries, ::testing::ValuesIn(catalog_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s) {
                             if (ch == '-') ch = '_';
                           }
                           return s;
                         });

TEST(Catalog, NamesAndLookupErrors) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"trivial", "z2-delta", "z3-delta", "z2-endo", "z3-endo",
                                                       "fibonacci", "ising", "graph-2v", "graph-1loop"}));
  EXPECT_EQ(code_of([] { (void)catalog_get("z5"); }), ErrorCode::name);
}

TEST(Catalog, VonNeumannFactorsForGroups) {
  for (std::size_t n : {2, 3}) {
    const auto result = run_suite(gen_group_delta(cyclic_table(n)));
    const auto& w = result.audits.find("von_neumann")->witnesses.front();
    // both sides agree up to the factor |G|²
    Element scaled = std::get<Element>(w.rhs);
    scaled *= Scalar(static_cast<unsigned long>(n * n));
    EXPECT_EQ(std::get<Element>(w.lhs), scaled);
    EXPECT_FALSE(scaled.is_zero());
  }
}

TEST(GenGroupDelta, SmallGroups) {
  std::vector<CayleyTable> tables{cyclic_table(1), cyclic_table(2), cyclic_table(3), cyclic_table(4), klein_table()};
  for (const auto& t : tables) {
    const auto spec = gen_group_delta(t);
    const auto c = contraction_report(spec);
    EXPECT_EQ(c.status("C1"), Status::pass);
    EXPECT_EQ(c.status("C2"), Status::pass);
    EXPECT_EQ(c.status("C5"), Status::pass);
    const auto r = run_suite(spec);
    EXPECT_EQ(r.audits.status("assoc"), Status::pass);
    EXPECT_EQ(r.audits.status("coassoc"), Status::pass);
    EXPECT_EQ(r.audits.status("delta_mult"), t.size() == 1 ? Status::pass : Status::fail) << t.size();
  }
}

TEST(GenGroupDelta, InversionIsSigma) {
  const auto spec = gen_group_delta(cyclic_table(4));
  EXPECT_EQ(spec.sigma->image, (std::vector<ObjectIndex>{0, 3, 2, 1}));
  EXPECT_EQ(spec.p_data.unit, 0U);
  EXPECT_EQ(spec.p_data.entries.size(), 16U);
}

TEST(GenGroupDelta, Errors) {
  EXPECT_EQ(code_of([] { (void)gen_group_delta({}); }), ErrorCode::group);
  EXPECT_EQ(code_of([] { (void)gen_group_delta({{0, 1}, {1}}); }), ErrorCode::group);
  EXPECT_EQ(code_of([] { (void)gen_group_delta({{0, 2}, {1, 0}}); }), ErrorCode::group);
  EXPECT_EQ(code_of([] { (void)gen_group_delta({{1, 0}, {0, 0}}); }), ErrorCode::group);   // no identity
  EXPECT_EQ(code_of([] { (void)gen_group_delta({{0, 1}, {1, 1}}); }), ErrorCode::group);   // 1 has no inverse
  // identity 0, but (1·1)·2 = 0·2 = 2 while 1·(1·2) = 1·0 = 1
  EXPECT_EQ(code_of([] { (void)gen_group_delta({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}); }), ErrorCode::group);
}

TEST(GenGroupDelta, ZTwoMatchesCatalog) {
  EXPECT_EQ(build_hall_fusion(gen_group_delta(cyclic_table(2))),
            build_hall_fusion(std::get<HallFusionSpec>(catalog_get("z2-delta").model)));
}

TEST(GenEndoGroup, StrictPassForAllDims) {
  for (std::uint64_t m = 1; m <= 6; ++m) {
    const auto r = run_suite(gen_endo_group(m));
    EXPECT_TRUE(r.all_pass()) << m;
    const auto& alg = r.algebra;
    const BasisId e = alg.basis().front();
    EXPECT_EQ(multiply(e, e, alg), Element(e));
  }
  EXPECT_EQ(code_of([] { (void)gen_endo_group(0); }), ErrorCode::range);
}

TEST(GenFusionRing, SupportSizes) {
  EXPECT_EQ(gen_fusion_ring(fibonacci_table()).p_data.entries.size(), 5U);
  EXPECT_EQ(gen_fusion_ring(ising_table()).p_data.entries.size(), 10U);
  const auto ising = build_hall_fusion(gen_fusion_ring(ising_table()));
  const BasisId ss = ising.basis_id("sig", "sig");
  Element expected;
  for (auto a : {"1", "eps"}) {
    for (auto b : {"1", "eps"}) expected.add(ising.basis_id(a, b), 1);
  }
  EXPECT_EQ(multiply(ss, ss, ising), expected);
}

TEST(GenFusionRing, Errors) {
  auto t = fibonacci_table();
  t.coefficients.erase({0, 1, 1});
  EXPECT_EQ(code_of([&] { (void)gen_fusion_ring(t); }), ErrorCode::unit);
  auto u = fibonacci_table();
  u.coefficients[{1, 0, 0}] = 1;
  EXPECT_EQ(code_of([&] { (void)gen_fusion_ring(u); }), ErrorCode::unit);
}

TEST(GraphEntries, Shapes) {
  const auto two = graph_two_vertex();
  EXPECT_EQ(two.max_degree, 3U);
  EXPECT_EQ(two.graph.vertices, (std::vector<std::string>{"1", "2"}));
  const auto r = run_suite(two);
  std::map<unsigned, std::size_t> dims;
  for (const auto& b : r.algebra.basis()) ++dims[r.algebra.degree_of(b)];
  EXPECT_EQ(dims, (std::map<unsigned, std::size_t>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(r.audits.status("eps_mult_weak"), Status::pass);
}
