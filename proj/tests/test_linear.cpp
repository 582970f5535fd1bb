#include <gtest/gtest.h>

#include "hfx/hfx.hpp"

using namespace hfx;

namespace {

BasisId e(std::uint32_t a, std::uint32_t b) { return {{a}, {b}}; }

PresentationTables one_element() {
  PresentationTables t;
  t.cell_names = {"g"};
  t.basis = {e(0, 0)};
  t.mul[{e(0, 0), e(0, 0)}] = Element(e(0, 0));
  t.comul[e(0, 0)] = TensorElement({e(0, 0), e(0, 0)});
  t.unit = Element(e(0, 0));
  t.counit[e(0, 0)] = 1;
  return t;
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  const Scalar q = make_scalar(6, -4);
  EXPECT_TRUE(is_canonical(q));
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(make_scalar(9, 9)), "1");
  EXPECT_EQ(to_string(make_scalar(0, 7)), "0");
  EXPECT_TRUE(is_integral(make_scalar(8, 4)));
  EXPECT_FALSE(is_integral(make_scalar(1, 3)));
  EXPECT_THROW((void)make_scalar(1, 0), Error);
}

TEST(Scalar, ParseRoundTrip) {
  EXPECT_EQ(parse_scalar("10/4"), make_scalar(5, 2));
  EXPECT_EQ(to_string(parse_scalar("-7")), "-7");
  EXPECT_THROW((void)parse_scalar("x"), Error);
  EXPECT_THROW((void)parse_scalar(""), Error);
}

TEST(Scalar, ArithmeticIsExact) {
  Scalar sum = 0;
  for (int k = 1; k <= 10; ++k) sum += make_scalar(1, k * (k + 1));
  EXPECT_EQ(sum, make_scalar(10, 11));
  EXPECT_TRUE(is_canonical(sum));
}

TEST(Element, NeverStoresZero) {
  Element x;
  x.add(e(0, 1), 3);
  x.add(e(1, 0), 1);
  x.add(e(0, 1), -3);
  EXPECT_EQ(x.size(), 1U);
  EXPECT_EQ(x.coefficient(e(0, 1)), 0);
  EXPECT_EQ(x, Element(e(1, 0)));
  x *= Scalar(0);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x, Element{});
}

TEST(Element, OrderedIteration) {
  Element x;
  x.add(e(1, 1), 1);
  x.add(e(0, 1), 2);
  x.add(e(1, 0), 3);
  std::vector<BasisId> keys;
  for (const auto& [k, c] : x) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<BasisId>{e(0, 1), e(1, 0), e(1, 1)}));
}

TEST(Element, LinearOperations) {
  const Element x = Element(e(0, 0), 2) + Element(e(0, 1), make_scalar(1, 2));
  const Element y = make_scalar(2) * x - Element(e(0, 0), 4);
  EXPECT_EQ(y, Element(e(0, 1)));
}

TEST(Presentation, FreezesAndSortsBasis) {
  auto t = one_element();
  t.cell_names = {"a", "b"};
  t.basis = {e(1, 0), e(0, 0), e(0, 1)};
  t.mul.clear();
  t.comul.clear();
  t.counit.clear();
  const AlgebraPresentation alg(std::move(t));
  EXPECT_EQ(alg.basis(), (std::vector<BasisId>{e(0, 0), e(0, 1), e(1, 0)}));
  EXPECT_EQ(alg.index_of(e(1, 0)), 2U);
  EXPECT_EQ(alg.name(e(0, 1)), "e(a;b)");
  EXPECT_EQ(alg.basis_id("b", "a"), e(1, 0));
  EXPECT_THROW((void)alg.basis_id("b", "b"), Error);
  EXPECT_THROW((void)alg.basis_id("c", "b"), Error);
}

TEST(Presentation, RejectsForeignBasisIds) {
  auto t = one_element();
  t.mul[{e(0, 0), e(0, 0)}] = Element(e(0, 1));
  try {
    AlgebraPresentation alg(std::move(t));
    FAIL() << "expected E_BASIS";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::basis);
  }
  auto u = one_element();
  u.basis.push_back(e(0, 0));
  EXPECT_THROW(AlgebraPresentation{std::move(u)}, Error);
}

TEST(Presentation, ChecksGrading) {
  auto t = one_element();
  t.degree = std::map<BasisId, unsigned>{{e(0, 0), 1}};
  // e·e = e breaks degree additivity for a degree-1 element
  try {
    AlgebraPresentation alg(std::move(t));
    FAIL() << "expected E_CELL";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::cell);
  }
  auto u = one_element();
  u.degree = std::map<BasisId, unsigned>{{e(0, 0), 0}};
  EXPECT_NO_THROW(AlgebraPresentation{std::move(u)});
}

TEST(LinearEndo, ExtendsLinearly) {
  const LinearEndo swap{{{e(0, 1), Element(e(1, 0))}, {e(1, 0), Element(e(0, 1))}}};
  const Element x = Element(e(0, 1), 2) + Element(e(1, 0), 3);
  EXPECT_EQ(swap(x), Element(e(1, 0), 2) + Element(e(0, 1), 3));
  EXPECT_EQ(swap(e(0, 0)), Element{});
}
