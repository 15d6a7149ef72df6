#include <gtest/gtest.h>

#include <array>

#include "vnl/constructions.hpp"
#include "vnl/properties.hpp"

using namespace vnl;

namespace {

FiniteRing F2() { return build_field(2, 1, {0, 1}); }

bool zn_regular(Index n, Index a) {
  for (Index x = 0; x < n; ++x)
    if ((a * x % n) * a % n == a) return true;
  return false;
}

// VNL of Z_n with integer arithmetic only.
bool zn_vnl_oracle(Index n) {
  for (Index a = 0; a < n; ++a)
    if (!zn_regular(n, a) && !zn_regular(n, (n + 1 - a) % n)) return false;
  return true;
}

std::vector<FiniteRing> sample_rings() {
  return {build_cyclic(12), build_cyclic(36), build_cyclic(4), build_cyclic(1),
          build_field(2, 2, {1, 1, 1}), build_matrix_ring(2, F2()).ring,
          build_upper_triangular(2, F2()).ring, build_upper_triangular(3, F2()).ring,
          build_product({build_cyclic(4), build_field(3, 1, {0, 1})}).ring,
          build_product({build_cyclic(4), build_cyclic(4)}).ring,
          build_product({F2(), build_upper_triangular(2, F2()).ring}).ring};
}

}  // namespace

TEST(Vnl, Examples) {
  EXPECT_TRUE(is_vnl(build_cyclic(12)).holds);
  EXPECT_TRUE(is_vnl(build_cyclic(4)).holds);
  auto r = is_vnl(build_cyclic(36));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  const Index a = r.witness->elements.front();
  EXPECT_FALSE(zn_regular(36, a));
  EXPECT_FALSE(zn_regular(36, (37 - a) % 36));
}

TEST(Vnl, CriterionMatchesIntegerOracle) {
  EXPECT_TRUE(zn_vnl_criterion(12));
  EXPECT_FALSE(zn_vnl_criterion(36));
  EXPECT_TRUE(zn_vnl_criterion(1));
  for (Index n = 1; n <= 100; ++n) {
    EXPECT_EQ(zn_vnl_criterion(n), zn_vnl_oracle(n)) << n;
    EXPECT_EQ(is_vnl(build_cyclic(n)).holds, zn_vnl_oracle(n)) << n;
  }
}

TEST(Nj, Examples) {
  EXPECT_TRUE(is_nj(build_upper_triangular(2, F2()).ring).holds);
  EXPECT_TRUE(is_nj(build_cyclic(4)).holds);
  const auto T3 = build_upper_triangular(3, F2()).ring;
  auto r = is_nj(T3);
  ASSERT_FALSE(r.holds);
  const Index a = r.witness->elements.front();
  EXPECT_FALSE(in_radical(T3, a));
  EXPECT_FALSE(is_regular(T3, a));
}

TEST(ExchangeFamily, Examples) {
  EXPECT_TRUE(is_exchange_ring(build_cyclic(12)).holds);
  EXPECT_TRUE(is_exchange_ring(build_matrix_ring(2, F2()).ring).holds);
  EXPECT_TRUE(is_exchange_ring(build_cyclic(1)).holds);
  EXPECT_TRUE(is_semipotent(build_cyclic(12)).holds);
  EXPECT_TRUE(is_semipotent(build_cyclic(9)).holds);
  EXPECT_TRUE(is_semipotent(build_upper_triangular(3, F2()).ring).holds);
  EXPECT_TRUE(is_potent(build_cyclic(4)).holds);
  EXPECT_TRUE(is_potent(build_matrix_ring(2, F2()).ring).holds);
  EXPECT_TRUE(is_potent(build_cyclic(36)).holds);
}

TEST(ExchangeFamily, ImplicationChain) {
  for (const auto& R : sample_rings()) {
    const bool nj = is_nj(R).holds, vnl = is_vnl(R).holds, ex = is_exchange_ring(R).holds;
    const bool potent = is_potent(R).holds, semi = is_semipotent(R).holds;
    if (nj) {
      EXPECT_TRUE(vnl) << R.label();
    }
    if (vnl) {
      EXPECT_TRUE(ex) << R.label();
    }
    if (ex) {
      EXPECT_TRUE(potent) << R.label();
    }
    if (potent) {
      EXPECT_TRUE(semi) << R.label();
    }
    EXPECT_TRUE(ex && potent && semi) << R.label();
  }
}

TEST(NVnl, TriangularThreeByThree) {
  const auto T3 = build_upper_triangular(3, F2()).ring;
  EXPECT_TRUE(is_n_vnl(T3, 1).holds);
  EXPECT_TRUE(is_n_vnl(T3, 2).holds);
  auto r = is_n_vnl(T3, 3);
  ASSERT_FALSE(r.holds);
  const auto& row = r.witness->elements;
  ASSERT_EQ(row.size(), 3u);
  for (Index a : row) EXPECT_FALSE(is_regular(T3, a));
  EXPECT_TRUE(is_unimodular_row(T3, std::span<const Index>(row)));
}

TEST(NVnl, MatchesOrderedTupleScan) {
  for (const auto& R : {build_cyclic(36), build_upper_triangular(2, F2()).ring, build_cyclic(16),
                        build_product({build_cyclic(4), build_cyclic(4)}).ring}) {
    bool counterexample = false;
    for (Index a = 0; a < R.order() && !counterexample; ++a)
      for (Index b = 0; b < R.order() && !counterexample; ++b) {
        const std::array<Index, 2> row{a, b};
        counterexample = is_unimodular_row(R, row) && !is_regular(R, a) && !is_regular(R, b);
      }
    EXPECT_EQ(is_n_vnl(R, 2).holds, !counterexample) << R.label();
  }
}

TEST(NVnl, Budget) {
  EXPECT_THROW(is_n_vnl(build_cyclic(100), 2), CapacityError);
  EXPECT_THROW(is_n_vnl(build_cyclic(10), 0), InvalidParameter);
  EXPECT_NO_THROW(is_n_vnl(build_cyclic(100), 2, {128}));
}

TEST(FastPaths, CornerCondition) {
  EXPECT_TRUE(vnl_via_corner_condition(build_cyclic(12)).holds);
  auto r = vnl_via_corner_condition(build_cyclic(36));
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.method, "corner-condition");
  EXPECT_TRUE(vnl_via_corner_condition(build_cyclic(4)).holds);
}

TEST(FastPaths, MrLocal) {
  EXPECT_TRUE(vnl_via_mr_local(build_cyclic(12)).holds);
  auto r = vnl_via_mr_local(build_cyclic(36));
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->elements.size(), 2u);
  EXPECT_TRUE(vnl_via_mr_local(build_cyclic(30)).holds);
  EXPECT_TRUE(vnl_via_mr_local(build_field(2, 2, {1, 1, 1})).holds);
}

TEST(FastPaths, AgreeOnAbelianRings) {
  for (Index n = 1; n <= 64; ++n) {
    auto R = build_cyclic(n);
    const bool vnl = is_vnl(R).holds;
    EXPECT_EQ(vnl_via_corner_condition(R).holds, vnl) << n;
    EXPECT_EQ(vnl_via_mr_local(R).holds, vnl) << n;
  }
}

TEST(Classifier, FixedShapes) {
  EXPECT_EQ(classify_semiperfect_vnl(build_matrix_ring(2, F2()).ring).tag, VnlShape::Semisimple);
  auto T2 = build_upper_triangular(2, F2());
  auto c2 = classify_semiperfect_vnl(T2.ring);
  ASSERT_EQ(c2.tag, VnlShape::TypeR1);
  EXPECT_EQ(c2.r1->S_order, 2u);
  EXPECT_EQ(c2.r1->L_order, 2u);
  EXPECT_EQ(c2.r1->X_order * c2.r1->Y_order, 2u);
  auto T3 = build_upper_triangular(3, F2());
  auto c3 = classify_semiperfect_vnl(T3.ring);
  ASSERT_EQ(c3.tag, VnlShape::TypeR2);
  EXPECT_EQ(c3.r2->T_order, 8u);
  EXPECT_EQ(c3.r2->D_order, 2u);
  EXPECT_TRUE(c3.r2->YX_zero);
  EXPECT_EQ(classify_semiperfect_vnl(build_cyclic(36)).tag, VnlShape::NotVNL);
  EXPECT_EQ(classify_semiperfect_vnl(build_cyclic(12)).tag, VnlShape::ProductWithSemisimple);
  EXPECT_EQ(classify_semiperfect_vnl(build_cyclic(8)).tag, VnlShape::TypeR1);
}

TEST(Classifier, EveryVnlSampleVerifies) {
  for (const auto& R : sample_rings()) {
    auto c = classify_semiperfect_vnl(R);
    EXPECT_EQ(c.tag == VnlShape::NotVNL, !is_vnl(R).holds) << R.label();
    if (c.tag != VnlShape::NotVNL) {
      EXPECT_EQ(shape_violation(R, c), "") << R.label();
    }
  }
}

TEST(NjEquivalence, Examples) {
  auto t2 = nj_equivalence_hypotheses(build_upper_triangular(2, F2()).ring);
  EXPECT_TRUE(t2.applicable);
  EXPECT_TRUE(t2.conclusion_checked);
  EXPECT_TRUE(t2.vnl && t2.nj && t2.exchange && t2.potent && t2.semipotent);
  EXPECT_FALSE(nj_equivalence_hypotheses(build_matrix_ring(2, F2()).ring).applicable);
  auto z4 = nj_equivalence_hypotheses(build_cyclic(4));
  EXPECT_TRUE(z4.applicable);
  EXPECT_TRUE(z4.conclusion_checked);
}

TEST(Lemmas, CornerConditionAndCornersOfVnlRings) {
  for (const auto& R : sample_rings()) {
    if (!is_vnl(R).holds) continue;
    for (Index e : idempotents(R)) {
      EXPECT_TRUE(corner_is_regular(R, e) || corner_is_regular(R, R.complement(e))) << R.label();
      EXPECT_TRUE(is_vnl(build_corner(R, e).ring).holds) << R.label() << " " << e;
    }
    EXPECT_TRUE(is_vnl(center(R).ring).holds) << R.label();
  }
}

TEST(Lemmas, ProductLaw) {
  const std::vector<FiniteRing> pieces{build_cyclic(4), F2(), build_cyclic(9),
                                       build_upper_triangular(2, F2()).ring};
  for (const auto& S : pieces)
    for (const auto& T : pieces) {
      const bool expected = (ring_is_regular(S) && is_vnl(T).holds) || (is_vnl(S).holds && ring_is_regular(T));
      EXPECT_EQ(is_vnl(build_product({S, T}).ring).holds, expected) << S.label() << " x " << T.label();
    }
}
