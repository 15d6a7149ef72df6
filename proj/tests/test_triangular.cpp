#include <gtest/gtest.h>

#include "vnl/triangular.hpp"

using namespace vnl;

namespace {

FiniteRing F2() { return build_field(2, 1, {0, 1}); }

// Brute-force regularity on the underlying ring, independent of the
// memoized cache.
bool regular_oracle(const FiniteRing& R, Index a) {
  for (Index x = 0; x < R.order(); ++x)
    if (R.mul(R.mul(a, x), a) == a) return true;
  return false;
}

}  // namespace

TEST(Bimodule, FieldOverItself) {
  auto F = F2();
  auto M = ring_bimodule(F);
  EXPECT_EQ(M.order(), 2u);
  EXPECT_EQ(M.left(1, 1), 1u);
}

TEST(Bimodule, IdealOfProduct) {
  auto P = build_product({F2(), F2()});
  const Index e = P.element({1, 0});
  auto M = ideal_bimodule(ideal_generated(P.ring, e), "ideal");
  EXPECT_EQ(M.order(), 2u);
  EXPECT_TRUE(M.left_annihilates(P.element({0, 1})));
}

TEST(Bimodule, RejectsBrokenAssociativity) {
  auto F = F2();
  // right action sends 0*0 to 1
  try {
    Bimodule::from_tables(F, F, 2, {0, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, "broken");
    FAIL() << "accepted";
  } catch (const InvalidParameter& e) {
    EXPECT_NE(std::string(e.what()).find("fails at"), std::string::npos) << e.what();
  }
}

TEST(Bimodule, RejectsMixedAssociativity) {
  auto Z4 = build_cyclic(4);
  auto F = F2();
  // Z_2 over (Z_4, Z_2): left action via reduction is fine, but a right
  // action by s=1 that swaps 0 and 1 is not additive.
  EXPECT_THROW(Bimodule::from_tables(Z4, F, 2, {0, 1, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1}, {0, 1, 1, 0}, "bad"),
               InvalidParameter);
}

TEST(Formal, F2CaseIsT2) {
  auto P = formal_from_upper_triangular(2, F2());
  EXPECT_EQ(P.formal.ring().order(), 8u);
  for (Index a = 0; a < 8; ++a) EXPECT_EQ(P.formal_to_upper[a], a);
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b)
      EXPECT_EQ(P.formal_to_upper[P.formal.ring().mul(a, b)],
                P.upper.ring.mul(P.formal_to_upper[a], P.formal_to_upper[b]));
}

TEST(Formal, T3AgreesUnderBijection) {
  for (Index q : {2u, 3u}) {
    auto P = formal_from_upper_triangular(3, build_field(q, 1, {0, 1}));
    const auto& T = P.formal.ring();
    const auto& U = P.upper.ring;
    ASSERT_EQ(T.order(), U.order());
    std::vector<bool> hit(U.order(), false);
    for (Index a = 0; a < T.order(); ++a) hit[P.formal_to_upper[a]] = true;
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(U.order()));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20000; ++k) {
      const Index a = rng() % T.order(), b = rng() % T.order();
      EXPECT_EQ(P.formal_to_upper[T.mul(a, b)], U.mul(P.formal_to_upper[a], P.formal_to_upper[b]));
    }
  }
}

TEST(Formal, ZeroModuleGivesProduct) {
  auto Z4 = build_cyclic(4);
  auto F3 = build_field(3, 1, {0, 1});
  auto T = build_formal_triangular(Z4, zero_bimodule(Z4, F3), F3);
  auto P = build_product({Z4, F3});
  EXPECT_EQ(T.ring().order(), 12u);
  for (Index a = 0; a < 12; ++a)
    for (Index b = 0; b < 12; ++b) EXPECT_EQ(T.ring().mul(a, b), P.ring.mul(a, b));
}

TEST(Formal, ColumnModuleOrder) {
  auto M2 = build_matrix_ring(2, F2());
  auto T = build_formal_triangular(M2.ring, column_module(M2), M2.base);
  EXPECT_EQ(T.ring().order(), 128u);
}

TEST(Formal, MismatchedRings) {
  auto A = build_cyclic(2), B = build_cyclic(2);
  EXPECT_THROW(build_formal_triangular(A, ring_bimodule(B), B), InvalidParameter);
}

TEST(Formal, EncodeDecodeRoundTrip) {
  auto M2 = build_matrix_ring(2, F2());
  auto T = build_formal_triangular(M2.ring, column_module(M2), M2.base);
  for (Index a = 0; a < T.ring().order(); ++a) EXPECT_EQ(T.encode(T.decode(a)), a);
  EXPECT_EQ(T.ring().one(), T.encode({M2.ring.one(), 0, 1}));
}

TEST(Partial, Examples) {
  auto F = F2();
  EXPECT_TRUE(is_partial_module(ring_bimodule(F), Sidedness::Left).holds);
  auto P = build_product({F2(), F2()});
  auto I = ideal_bimodule(ideal_generated(P.ring, P.element({1, 0})), "ideal");
  EXPECT_TRUE(is_partial_module(I, Sidedness::Left).holds);
  auto M2 = build_matrix_ring(2, F2());
  auto r = is_partial_module(column_module(M2), Sidedness::Left);
  ASSERT_FALSE(r.holds);
  const Index e = r.witness->elements.front();
  EXPECT_TRUE(is_idempotent(M2.ring, e));
  EXPECT_THROW(is_partial_module(I, Sidedness::TwoSided), InvalidParameter);
}

TEST(Partial, SimpleModulesOverZn) {
  // Z_p as a module over Z_n for p | n is simple; check partiality
  for (Index n : {6u, 10u, 12u, 30u})
    for (Index p : {2u, 3u, 5u}) {
      if (n % p) continue;
      auto R = build_cyclic(n);
      auto Fp = build_field(p, 1, {0, 1});
      EXPECT_TRUE(is_partial_module(cyclic_bimodule(R, Fp, p), Sidedness::Left).holds) << n << " " << p;
    }
}

TEST(Prop28, Examples) {
  auto P = formal_from_upper_triangular(2, F2());
  EXPECT_TRUE(regular_via_prop28(P.formal, {1, 1, 0}));
  EXPECT_FALSE(regular_via_prop28(P.formal, {0, 1, 0}));
  auto w = regular_via_prop28(P.formal, {1, 0, 1});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->inner_inverse, P.formal.ring().one());
}

TEST(Prop28, AgreesWithBruteForce) {
  auto F = F2();
  auto M2 = build_matrix_ring(2, F);
  auto T2 = build_upper_triangular(2, F);
  auto Z4 = build_cyclic(4);
  std::vector<TriangularRing> rings{
      build_formal_triangular(T2.ring, column_module(T2), F),
      build_formal_triangular(M2.ring, column_module(M2), F),
      build_formal_triangular(Z4, ring_bimodule(Z4), Z4),
      build_formal_triangular(Z4, cyclic_bimodule(Z4, F, 2), F)};
  for (const auto& T : rings)
    for (Index a = 0; a < T.ring().order(); ++a) {
      auto w = regular_via_prop28(T, T.decode(a));
      EXPECT_EQ(w.has_value(), regular_oracle(T.ring(), a)) << T.ring().label() << " " << a;
      if (w) {
        EXPECT_EQ(T.ring().mul3(a, w->inner_inverse, a), a);
      }
    }
}

TEST(Thm212, Examples) {
  auto P = build_product({F2(), F2()});
  auto I = ideal_bimodule(ideal_generated(P.ring, P.element({1, 0})), "ideal");
  EXPECT_TRUE(vnl_via_thm212(P.ring, I, P.ring).holds);
  auto M2 = build_matrix_ring(2, F2());
  auto natural = ring_bimodule(M2.ring);
  auto r = vnl_via_thm212(M2.ring, natural, M2.ring);
  EXPECT_FALSE(r.holds);
  EXPECT_NE(r.witness->note.find("condition (2)"), std::string::npos);
  EXPECT_TRUE(vnl_via_thm212(M2.ring, zero_bimodule(M2.ring, M2.ring), M2.ring).holds);
}

TEST(Thm212, MatchesBruteForce) {
  auto F = F2();
  auto F3 = build_field(3, 1, {0, 1});
  auto T2 = build_upper_triangular(2, F);
  auto Z4 = build_cyclic(4), Z12 = build_cyclic(12);
  auto P = build_product({F2(), F2()});
  std::vector<std::pair<FiniteRing, Bimodule>> cases;
  cases.emplace_back(Z4, ring_bimodule(Z4));
  cases.emplace_back(T2.ring, column_module(T2));
  cases.emplace_back(P.ring, ring_bimodule(P.ring));
  cases.emplace_back(Z12, cyclic_bimodule(Z12, F3, 3));
  cases.emplace_back(F, cyclic_bimodule(F, Z4, 2));
  cases.emplace_back(Z4, cyclic_bimodule(Z4, Z4, 2));
  for (const auto& [R, M] : cases) {
    auto T = build_formal_triangular(R, M, M.right_ring());
    auto c = thm212_conditions(M);
    EXPECT_EQ(c.report.holds, is_vnl(T.ring()).holds) << T.ring().label();
  }
}

TEST(UnitCorner, Examples) {
  auto P = formal_from_upper_triangular(2, F2());
  const auto& T = P.formal;
  auto w = witness_unit_corner(T, {1, 1, 1});
  ASSERT_TRUE(w);
  EXPECT_EQ(T.decode(w->inner_inverse), (Triple{1, 1, 1}));
  auto z = witness_unit_corner(T, {0, 1, 1});
  ASSERT_TRUE(z);
  EXPECT_EQ(T.decode(z->inner_inverse), (Triple{0, 0, 1}));
  EXPECT_FALSE(witness_unit_corner(T, {1, 1, 0}));
}

TEST(UnitCorner, FormulaIsExact) {
  auto Z4 = build_cyclic(4);
  auto T = build_formal_triangular(Z4, ring_bimodule(Z4), Z4);
  for (Index a = 0; a < T.ring().order(); ++a)
    if (auto w = witness_unit_corner(T, T.decode(a))) {
      EXPECT_EQ(T.ring().mul3(a, w->inner_inverse, a), a);
    }
}

TEST(BlockInverse, ValidOnT3) {
  auto T3 = build_upper_triangular(3, F2());
  const auto& R = T3.ring;
  const Index eD = T3.unit(2, 2), eT = R.complement(eD);
  int checked = 0;
  for (Index c = 0; c < R.order(); ++c) {
    if (!is_unit(R, c)) continue;
    auto inv = peirce_block_inverse(R, eT, eD, c);
    ASSERT_TRUE(inv);
    EXPECT_EQ(R.mul(c, *inv), R.one());
    EXPECT_EQ(R.mul(*inv, c), R.one());
    ++checked;
  }
  EXPECT_EQ(checked, 8);
}
