#include <gtest/gtest.h>

#include "vnl/constructions.hpp"

using namespace vnl;

namespace {

// Cayley-table comparison under an explicit bijection phi: A -> B.
bool isomorphic_via(const FiniteRing& A, const FiniteRing& B, const std::vector<Index>& phi) {
  if (A.order() != B.order()) return false;
  for (Index a = 0; a < A.order(); ++a)
    for (Index b = 0; b < A.order(); ++b)
      if (phi[A.add(a, b)] != B.add(phi[a], phi[b]) || phi[A.mul(a, b)] != B.mul(phi[a], phi[b]))
        return false;
  return true;
}

std::vector<Index> multiples_of_one(const FiniteRing& A) {
  std::vector<Index> out;
  Index x = A.zero();
  for (Index k = 0; k < A.order(); ++k) {
    out.push_back(x);
    x = A.add(x, A.one());
  }
  return out;
}

}  // namespace

TEST(Cyclic, ModularArithmetic) {
  auto Z4 = build_cyclic(4);
  EXPECT_EQ(Z4.add(2, 3), 1u);
  EXPECT_EQ(Z4.mul(2, 2), 0u);
  EXPECT_EQ(Z4.label(), "Zn(4)");
  EXPECT_EQ(Z4.repr_kind(), ReprKind::DenseTable);
}

TEST(Cyclic, ZeroRingAndErrors) {
  auto Z1 = build_cyclic(1);
  EXPECT_EQ(Z1.zero(), Z1.one());
  EXPECT_TRUE(Z1.is_zero_ring());
  EXPECT_THROW(build_cyclic(0), InvalidParameter);
}

TEST(Cyclic, Z12IsCommutative) {
  auto R = build_cyclic(12);
  for (Index a = 0; a < 12; ++a)
    for (Index b = 0; b < 12; ++b) EXPECT_EQ(R.mul(a, b), R.mul(b, a));
}

TEST(Field, F4Multiplication) {
  auto F4 = build_field(2, 2, {1, 1, 1});
  EXPECT_EQ(F4.order(), 4u);
  EXPECT_EQ(F4.mul(2, 2), 3u);  // x*x = x+1
  EXPECT_EQ(F4.label(), "GF(2,2)");
  EXPECT_TRUE(find_axiom_violation(F4, {}).empty());
  for (Index a = 1; a < 4; ++a) {
    bool invertible = false;
    for (Index b = 1; b < 4; ++b) invertible |= F4.mul(a, b) == F4.one();
    EXPECT_TRUE(invertible) << a;
  }
}

TEST(Field, RejectsReducibleModulusWithFactor) {
  try {
    build_field(2, 2, {1, 0, 1});
    FAIL() << "x^2+1 accepted";
  } catch (const InvalidParameter& e) {
    EXPECT_NE(std::string(e.what()).find("x+1"), std::string::npos) << e.what();
  }
}

TEST(Field, RejectsNonPrime) { EXPECT_THROW(build_field(4, 1, {0, 1}), InvalidParameter); }

TEST(Field, PrimeFieldIsCyclic) {
  auto F2 = build_field(2, 1, {0, 1});
  EXPECT_EQ(F2.label(), "GF(2)");
  EXPECT_TRUE(isomorphic_via(build_cyclic(2), F2, {0, 1}));
}

TEST(Field, DefaultModulusIsLeastIrreducible) {
  EXPECT_EQ(default_modulus(2, 2), (Poly{1, 1, 1}));
  EXPECT_EQ(default_modulus(3, 2), (Poly{1, 0, 1}));
  EXPECT_EQ(poly_to_string({1, 1, 1}), "x^2+x+1");
}

TEST(Product, CrtMatchesZ6) {
  auto P = build_product({build_cyclic(2), build_cyclic(3)});
  EXPECT_EQ(P.ring.order(), 6u);
  auto Z6 = build_cyclic(6);
  // 1 generates both additive groups, so k*1 -> k*1 is the bijection
  auto phi = multiples_of_one(P.ring);
  std::vector<Index> inverse(6);
  for (Index k = 0; k < 6; ++k) inverse[phi[k]] = k;
  EXPECT_TRUE(isomorphic_via(P.ring, Z6, inverse));
}

TEST(Product, OrdersAndProjections) {
  auto P = build_product({build_cyclic(4), build_field(3, 1, {0, 1})});
  EXPECT_EQ(P.ring.order(), 12u);
  for (Index a = 0; a < 12; ++a)
    for (Index b = 0; b < 12; ++b)
      for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(P.project(i, P.ring.mul(a, b)), P.factors[i].mul(P.project(i, a), P.project(i, b)));
        EXPECT_EQ(P.project(i, P.ring.add(a, b)), P.factors[i].add(P.project(i, a), P.project(i, b)));
      }
  EXPECT_EQ(P.element({1, 2}), 5u);  // first factor most significant
}

TEST(Product, SingleFactorAndEmpty) {
  auto Z5 = build_cyclic(5);
  EXPECT_TRUE(build_product({Z5}).ring.same_ring(Z5));
  EXPECT_THROW(build_product({}), InvalidParameter);
}

TEST(Matrix, Orders) {
  auto F2 = build_field(2, 1, {0, 1});
  EXPECT_EQ(build_matrix_ring(2, F2).ring.order(), 16u);
  EXPECT_EQ(build_matrix_ring(2, build_cyclic(4)).ring.order(), 256u);
  EXPECT_EQ(build_upper_triangular(2, F2).ring.order(), 8u);
  EXPECT_EQ(build_upper_triangular(3, F2).ring.order(), 64u);
  EXPECT_EQ(build_upper_triangular(4, F2).ring.order(), 1024u);
}

TEST(Matrix, OneByOneIsBase) {
  auto Z6 = build_cyclic(6);
  auto M1 = build_matrix_ring(1, Z6);
  std::vector<Index> id(6);
  for (Index k = 0; k < 6; ++k) id[k] = k;
  EXPECT_TRUE(isomorphic_via(M1.ring, Z6, id));
}

TEST(Matrix, MatrixUnitsMultiply) {
  auto M = build_matrix_ring(2, build_field(2, 1, {0, 1}));
  const auto& R = M.ring;
  EXPECT_EQ(R.mul(M.unit(0, 1), M.unit(1, 0)), M.unit(0, 0));
  EXPECT_EQ(R.mul(M.unit(1, 0), M.unit(0, 1)), M.unit(1, 1));
  EXPECT_EQ(R.mul(M.unit(0, 1), M.unit(0, 1)), R.zero());
  EXPECT_EQ(R.add(M.unit(0, 0), M.unit(1, 1)), R.one());
}

TEST(Matrix, TriangularIndexing) {
  auto T2 = build_upper_triangular(2, build_field(2, 1, {0, 1}));
  EXPECT_EQ(T2.unit(1, 1), 1u);
  EXPECT_EQ(T2.unit(0, 1), 2u);
  EXPECT_EQ(T2.unit(0, 0), 4u);
}

TEST(Matrix, StructuredAboveCap) {
  EXPECT_EQ(build_matrix_ring(2, build_field(3, 1, {0, 1})).ring.order(), 81u);
  RingConfig cfg;
  cfg.sample_budget = 2000;
  auto M = build_matrix_ring(2, build_cyclic(9), cfg);
  EXPECT_EQ(M.ring.order(), 6561u);
  EXPECT_EQ(M.ring.repr_kind(), ReprKind::Structured);
  EXPECT_EQ(M.ring.mul(M.unit(0, 1), M.unit(1, 0)), M.unit(0, 0));
}

TEST(Matrix, CapacityError) {
  RingConfig cfg;
  cfg.max_order = 1000;
  EXPECT_THROW(build_matrix_ring(2, build_cyclic(6), cfg), CapacityError);
}

TEST(Quotient, Z12ByMultiplesOfFour) {
  auto R = build_cyclic(12);
  ElementSet members(12);
  for (Index a : {0, 4, 8}) members.insert(a);
  auto Q = build_quotient(R, SubsetIdeal(R, members, Sidedness::TwoSided));
  EXPECT_EQ(Q.ring.order(), 4u);
  EXPECT_EQ(Q.representative, (std::vector<Index>{0, 1, 2, 3}));
  EXPECT_TRUE(isomorphic_via(Q.ring, build_cyclic(4), {0, 1, 2, 3}));
  for (Index a = 0; a < 12; ++a)
    for (Index b = 0; b < 12; ++b) {
      EXPECT_EQ(Q.map(R.mul(a, b)), Q.ring.mul(Q.map(a), Q.map(b)));
      EXPECT_EQ(Q.map(R.add(a, b)), Q.ring.add(Q.map(a), Q.map(b)));
    }
}

TEST(Quotient, TrivialIdeals) {
  auto R = build_cyclic(10);
  ElementSet zero(10), all(10);
  zero.insert(0);
  for (Index a = 0; a < 10; ++a) all.insert(a);
  EXPECT_EQ(build_quotient(R, SubsetIdeal(R, zero, Sidedness::TwoSided)).ring.order(), 10u);
  auto Q = build_quotient(R, SubsetIdeal(R, all, Sidedness::TwoSided));
  EXPECT_TRUE(Q.ring.is_zero_ring());
}

TEST(Quotient, RejectsNonIdeal) {
  auto R = build_cyclic(12);
  ElementSet bad(12);
  for (Index a : {0, 3}) bad.insert(a);
  EXPECT_THROW(SubsetIdeal(R, bad, Sidedness::TwoSided), InvalidParameter);
  auto M = build_matrix_ring(2, build_field(2, 1, {0, 1}));
  // the right ideal E_11 R is not two-sided
  ElementSet row(16);
  for (Index r = 0; r < 16; ++r) row.insert(M.ring.mul(M.unit(0, 0), r));
  SubsetIdeal right(M.ring, row, Sidedness::Right);
  EXPECT_THROW(build_quotient(M.ring, right), InvalidParameter);
  EXPECT_THROW(SubsetIdeal(M.ring, row, Sidedness::TwoSided), InvalidParameter);
}

TEST(Corner, IdentityZeroAndMatrixUnit) {
  auto M = build_matrix_ring(2, build_field(2, 1, {0, 1}));
  EXPECT_EQ(build_corner(M.ring, M.ring.one()).ring.order(), 16u);
  EXPECT_TRUE(build_corner(M.ring, M.ring.zero()).ring.is_zero_ring());
  auto C = build_corner(M.ring, M.unit(0, 0));
  EXPECT_EQ(C.ring.order(), 2u);
  EXPECT_TRUE(isomorphic_via(C.ring, build_cyclic(2), {0, 1}));
  EXPECT_THROW(build_corner(M.ring, M.unit(0, 1)), InvalidParameter);
}

TEST(Corner, MultiplicationAgreesWithAmbient) {
  auto R = build_cyclic(12);
  auto C = build_corner(R, 4);
  for (Index x = 0; x < C.ring.order(); ++x)
    for (Index y = 0; y < C.ring.order(); ++y)
      EXPECT_EQ(C.include(C.ring.mul(x, y)), R.mul(C.include(x), C.include(y)));
}

TEST(Center, Examples) {
  auto F2 = build_field(2, 1, {0, 1});
  EXPECT_EQ(center(build_matrix_ring(2, F2).ring).ring.order(), 2u);
  EXPECT_EQ(center(build_upper_triangular(2, F2).ring).ring.order(), 2u);
  EXPECT_EQ(center(build_cyclic(9)).ring.order(), 9u);
}

TEST(Validation, RejectsBrokenTables) {
  // non-associative "multiplication" on Z3
  EXPECT_THROW(FiniteRing::from_operations(
                   3, 0, 1, "broken", [](Index a, Index b) { return (a + b) % 3; },
                   [](Index a, Index b) { return a == 2 && b == 2 ? 2u : (a * b) % 3; },
                   [](Index a) { return (3 - a) % 3; }, {}),
               InvalidParameter);
}

TEST(Validation, CorpusConstructionsPass) {
  auto F2 = build_field(2, 1, {0, 1});
  for (const auto& R : {build_cyclic(36), build_field(2, 3, default_modulus(2, 3)),
                        build_upper_triangular(3, F2).ring, build_matrix_ring(2, build_cyclic(4)).ring})
    EXPECT_TRUE(find_axiom_violation(R, {}).empty()) << R.label();
}
