#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "vnl/harness/corpus.hpp"
#include "vnl/properties.hpp"

namespace vnl::harness {

struct Failure {
  std::string ring;
  std::string witness;
  std::string condition;
};

struct TheoremReport {
  std::string theorem_id;
  std::string corpus_description;
  std::size_t instances_checked = 0;
  std::vector<Failure> failures;
  long long wall_time_ms = 0;
};

struct SuiteContext {
  const Corpus& corpus;
  Elaborator& elab;
  NVnlBudget budget;
};

namespace checks {

using Report = TheoremReport;

inline std::string members_of(const std::vector<Index>& v) { return format_members(v); }
inline std::string elem(Index a) { return "a=" + std::to_string(a); }
inline std::string idem(Index e) { return "e=" + std::to_string(e); }

/// Analyzable corpus entries accepted by `keep`.
template <class Pred>
std::vector<const CorpusEntry*> select(const SuiteContext& ctx, Pred keep) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : ctx.corpus.entries)
    if (e.analyzable() && keep(e)) out.push_back(&e);
  return out;
}

inline auto all = [](const CorpusEntry&) { return true; };

inline bool vnl(const FiniteRing& R) { return is_vnl(R).holds; }

inline std::vector<Index> proper_idempotents(const FiniteRing& R) {
  std::vector<Index> out;
  for (Index e : idempotents(R))
    if (e != R.zero() && e != R.one()) out.push_back(e);
  return out;
}

/// Simple artinian: nonzero, J = 0 and no nontrivial central idempotent.
inline bool ring_is_simple(const FiniteRing& R) {
  return !R.is_zero_ring() && radical_is_zero(R) && !has_nontrivial_central_idempotent(R);
}

inline std::string verdict(bool value) { return value ? "true" : "false"; }

// ---------------------------------------------------------------------------

inline void prop_2_2(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    ++rep.instances_checked;
    const auto Z = center(R, analysis_config());
    if (auto r = is_vnl(Z.ring); !r.holds)
      rep.failures.push_back({e->expr, elem(Z.include(r.witness->elements.front())),
                              "central a with neither a nor 1-a regular in the center"});
  }
}

inline void cor_2_3(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    ++rep.instances_checked;
    const bool indecomposable = !has_nontrivial_central_idempotent(R);
    const bool center_local = ring_is_local(center(R, analysis_config()).ring);
    if (indecomposable != center_local)
      rep.failures.push_back({e->expr, "", "indecomposable=" + verdict(indecomposable) +
                                               " but center local=" + verdict(center_local)});
  }
}

inline void lemma_2_4(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    for (Index f : idempotents(R)) {
      ++rep.instances_checked;
      if (!corner_is_regular(R, f) && !corner_is_regular(R, R.complement(f)))
        rep.failures.push_back({e->expr, idem(f), "neither eRe nor (1-e)R(1-e) is regular"});
    }
  }
}

inline void cor_2_6(SuiteContext& ctx, Report& rep) {
  const Index cap = ctx.corpus.profile == Profile::Quick ? 6 : 8;
  for (const auto* e : select(ctx, [&](const CorpusEntry& c) {
         return (c.origin == Origin::Base || c.origin == Origin::Product) && c.ring().order() <= cap;
       })) {
    ++rep.instances_checked;
    const auto M2 = ctx.elab.build("M(2," + e->expr + ")");
    const bool regular = ring_is_regular(e->ring());
    const auto r = is_vnl(M2->ring);
    if (r.holds != regular)
      rep.failures.push_back({M2->expr, r.holds ? "" : elem(r.witness->elements.front()),
                              "M_2 VNL=" + verdict(r.holds) + " but base regular=" + verdict(regular)});
  }
}

inline void cor_2_7(SuiteContext& ctx, Report& rep) {
  const NVnlBudget budget{32};
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.ring().order() <= 32; })) {
    const FiniteRing& R = e->ring();
    if (!ring_is_abelian(R) || !vnl(R)) continue;
    for (Index n : {2u, 3u}) {
      ++rep.instances_checked;
      if (auto r = is_n_vnl(R, n, budget); !r.holds)
        rep.failures.push_back({e->expr, "row=" + members_of(r.witness->elements),
                                "unimodular row of length " + std::to_string(n) + " without a regular entry"});
    }
  }
}

inline void prop_2_8(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->tri && c.ring().order() <= 256; })) {
    const TriangularRing& T = *e->built->tri;
    const FiniteRing& R = T.ring();
    for (Index a = 0; a < R.order(); ++a) {
      ++rep.instances_checked;
      const auto fast = regular_via_prop28(T, T.decode(a));
      const auto brute = regular_witness(R, a);
      if (fast.has_value() != brute.has_value())
        throw InternalInconsistency("prop-2.8 on " + e->expr + " " + elem(a) + ": idempotent criterion says " +
                                    verdict(fast.has_value()) + ", brute force says " + verdict(brute.has_value()));
      if (brute && R.mul3(a, brute->inner_inverse, a) != a)
        throw InternalInconsistency("brute-force inner inverse fails on " + e->expr + " " + elem(a));
    }
  }
}

inline void prop_2_11(SuiteContext& ctx, Report& rep) {
  for (const char* expr : {"M(2,GF(2))", "M(2,GF(3))"}) {
    const auto A = ctx.elab.build(expr);
    const Bimodule col = column_module(*A->matrix);
    const FiniteRing& S = A->ring;
    for (Index m = 0; m < col.order(); ++m) {
      if (m == col.zero()) continue;
      ++rep.instances_checked;
      bool split = false;
      for (Index f : idempotents(S))
        if (col.left(f, m) != col.zero() && col.left(S.complement(f), m) != col.zero()) {
          split = true;
          break;
        }
      if (!split)
        rep.failures.push_back({expr, "m=" + std::to_string(m), "no idempotent e with em != 0 and (1-e)m != 0"});
    }
    ++rep.instances_checked;
    if (is_partial_module(col, Sidedness::Left).holds)
      rep.failures.push_back({expr, "", "column module reported partial"});
  }
}

inline void thm_2_12(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->tri.has_value(); })) {
    ++rep.instances_checked;
    const TriangularRing& T = *e->built->tri;
    const bool fast = vnl_via_thm212(T.left_ring(), T.module(), T.right_ring()).holds;
    const bool brute = vnl(T.ring());
    if (fast != brute)
      throw InternalInconsistency("thm-2.12 on " + e->expr + ": criterion says " + verdict(fast) +
                                  ", brute force says " + verdict(brute));
  }
}

inline void cor_2_13(SuiteContext& ctx, Report& rep) {
  struct Case {
    const char* expr;
    bool expected;
  };
  for (const Case c : {Case{"T(2,GF(2))", true}, Case{"T(3,GF(2))", true}, Case{"T(4,GF(2))", false},
                       Case{"T(2,GF(3))", true}, Case{"T(3,GF(3))", true}, Case{"T(2,GF(2,2))", true},
                       Case{"T(2,Zn(4))", false}}) {
    ++rep.instances_checked;
    const auto B = ctx.elab.build(c.expr);
    const auto r = is_vnl(B->ring);
    if (r.holds != c.expected)
      rep.failures.push_back({c.expr, r.holds ? "" : elem(r.witness->elements.front()),
                              "VNL=" + verdict(r.holds) + ", expected " + verdict(c.expected)});
  }
}

inline void cor_2_14(SuiteContext& ctx, Report& rep) {
  std::vector<std::string> exprs{"Tri(M(2,GF(2)),zero,Zn(4))", "Tri(Zn(6),zero,Zn(8))", "Tri(GF(3),zero,Zn(9))"};
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->tri.has_value(); }))
    exprs.push_back(e->expr);
  for (const auto& expr : exprs) {
    const auto B = ctx.elab.build(expr);
    const TriangularRing& T = *B->tri;
    if (!ring_is_regular(T.left_ring()) || T.right_ring().is_zero_ring() || !ring_is_local(T.right_ring()))
      continue;
    ++rep.instances_checked;
    if (auto r = is_vnl(T.ring()); !r.holds)
      rep.failures.push_back({expr, elem(r.witness->elements.front()), "regular R, local S, but not VNL"});
  }
  ++rep.instances_checked;
  const std::string lastcol = "Tri(M(2,GF(2)),lastcol,T(2,GF(2)))";
  if (auto r = is_vnl(ctx.elab.build(lastcol)->ring); !r.holds)
    rep.failures.push_back({lastcol, elem(r.witness->elements.front()), "last-column instance is not VNL"});
}

inline void cor_2_15(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->tri.has_value(); })) {
    const TriangularRing& T = *e->built->tri;
    if (!ring_is_simple(T.left_ring()) || !ring_is_simple(T.right_ring())) continue;
    ++rep.instances_checked;
    const bool expected = T.module().order() == 1 || ring_is_division(T.left_ring()) ||
                          ring_is_division(T.right_ring());
    const bool actual = vnl(T.ring());
    if (actual != expected)
      rep.failures.push_back({e->expr, "", "VNL=" + verdict(actual) + ", expected " + verdict(expected)});
  }
}

/// Nonzero two-sided ideals of R, one least generator per member set.
inline std::vector<Index> ideal_generators(const FiniteRing& R) {
  std::vector<Index> out;
  std::vector<ElementSet> seen;
  for (Index a = 0; a < R.order(); ++a) {
    if (a == R.zero()) continue;
    const auto I = ideal_generated(R, a);
    bool fresh = true;
    for (const auto& s : seen) fresh = fresh && !(s == I.members());
    if (!fresh) continue;
    seen.push_back(I.members());
    out.push_back(a);
  }
  return out;
}

/// Some central idempotent e has I = Re, eRe a division ring and
/// (1-e)R(1-e) satisfying `rest`.
template <class Rest>
bool splits_off_division_ideal(const FiniteRing& R, const ElementSet& I, Rest rest) {
  for (Index e : idempotents(R)) {
    if (e == R.zero() || !is_central(R, e)) continue;
    if (!(ideal_generated(R, e).members() == I)) continue;
    if (corner_is_division(R, e) && rest(R.complement(e))) return true;
  }
  return false;
}

inline void tri_over_ideals(SuiteContext& ctx, Report& rep, bool commutative_only, Index cap,
                            const std::function<bool(const FiniteRing&, Index)>& rest) {
  for (const auto* e : select(ctx, [&](const CorpusEntry& c) {
         return (c.origin == Origin::Base || c.origin == Origin::Product) && c.ring().order() <= cap;
       })) {
    const FiniteRing& R = e->ring();
    if (commutative_only && !ring_is_commutative(R)) continue;
    for (Index a : ideal_generators(R)) {
      const auto I = ideal_generated(R, a);
      if (static_cast<std::size_t>(R.order()) * R.order() * I.size() > 4096) continue;
      ++rep.instances_checked;
      const std::string expr = "Tri(" + e->expr + ",ideal:" + std::to_string(a) + "," + e->expr + ")";
      const bool expected = splits_off_division_ideal(R, I.members(), [&](Index f) { return rest(R, f); });
      const bool actual = vnl(ctx.elab.build(expr)->ring);
      if (actual != expected)
        rep.failures.push_back({expr, "", "VNL=" + verdict(actual) + ", expected " + verdict(expected)});
    }
  }
}

inline void cor_2_16(SuiteContext& ctx, Report& rep) {
  tri_over_ideals(ctx, rep, true, ctx.corpus.profile == Profile::Quick ? 8 : 12,
                  [](const FiniteRing& R, Index f) { return corner_is_regular(R, f); });
}

inline void cor_2_17(SuiteContext& ctx, Report& rep) {
  tri_over_ideals(ctx, rep, false, ctx.corpus.profile == Profile::Quick ? 8 : 16,
                  [](const FiniteRing& R, Index f) { return corner_is_semisimple(R, f); });
  std::vector<std::pair<std::string, Index>> instances{{"Prod(GF(2),GF(2,2))", 4}};
  if (ctx.corpus.profile == Profile::Full) instances.emplace_back("Prod(GF(2),M(2,GF(2)))", 16);
  for (const auto& [base, d] : instances) {
    ++rep.instances_checked;
    const std::string expr = "Tri(" + base + ",ideal:" + std::to_string(d) + "," + base + ")";
    const auto B = ctx.elab.build(expr);
    const TriangularRing& T = *B->tri;
    if (auto r = is_vnl(T.ring()); !r.holds) {
      rep.failures.push_back({expr, elem(r.witness->elements.front()), "instance is not VNL"});
      continue;
    }
    const Index E = T.encode({d, T.module().zero(), d});
    if (!is_idempotent(T.ring(), E) || !is_central(T.ring(), E)) {
      rep.failures.push_back({expr, idem(E), "E is not a central idempotent"});
      continue;
    }
    if (auto r = is_vnl(build_corner(T.ring(), E, analysis_config()).ring); !r.holds)
      rep.failures.push_back({expr, idem(E), "corner ET is not VNL"});
  }
}

inline void lemma_2_18(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    for (Index f : idempotents(R)) {
      ++rep.instances_checked;
      const auto C = build_corner(R, f, analysis_config());
      if (auto r = is_vnl(C.ring); !r.holds)
        rep.failures.push_back({e->expr, idem(f) + " " + elem(C.include(r.witness->elements.front())),
                                "corner eRe is not VNL"});
    }
  }
}

inline void thm_3_1(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return ring_is_abelian(c.ring()); })) {
    ++rep.instances_checked;
    const bool fast = vnl_via_corner_condition(e->ring()).holds, brute = vnl(e->ring());
    if (fast != brute)
      throw InternalInconsistency("thm-3.1 on " + e->expr + ": corner condition says " + verdict(fast) +
                                  ", brute force says " + verdict(brute));
  }
}

inline void thm_3_5(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return ring_is_abelian(c.ring()); })) {
    ++rep.instances_checked;
    const bool fast = vnl_via_mr_local(e->ring()).holds, brute = vnl(e->ring());
    if (fast != brute)
      throw InternalInconsistency("thm-3.5 on " + e->expr + ": R/M(R) local says " + verdict(fast) +
                                  ", brute force says " + verdict(brute));
  }
}

inline void lemma_3_4(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.ring().order() <= 256; })) {
    const FiniteRing& R = e->ring();
    const bool base = vnl(R);
    for (const auto& ref : detail::regular_ideal_refs(R)) {
      ++rep.instances_checked;
      const auto Q = build_quotient(R, ctx.elab.resolve_ideal(*e->built, ref), analysis_config());
      const bool quotient = vnl(Q.ring);
      if (base != quotient)
        rep.failures.push_back({"Quot(" + e->expr + "," + ref + ")", "",
                                "R VNL=" + verdict(base) + " but R/I VNL=" + verdict(quotient)});
    }
  }
}

inline void example_3_3(SuiteContext& ctx, Report& rep) {
  std::vector<const char*> exprs{"T(2,GF(2))"};
  if (ctx.corpus.profile == Profile::Full) exprs.insert(exprs.end(), {"T(2,GF(3))", "T(2,GF(2,2))"});
  for (const char* expr : exprs) {
    ++rep.instances_checked;
    const auto M = maximal_regular_ideal(ctx.elab.build(expr)->ring);
    if (!M.is_zero()) rep.failures.push_back({expr, "M=" + M.describe(), "maximal regular ideal is nonzero"});
  }
}

inline constexpr Index kPeirceCap = 1024;

inline void lemma_4_1(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.ring().order() <= kPeirceCap; })) {
    const FiniteRing& R = e->ring();
    for (Index f : idempotents(R)) {
      ++rep.instances_checked;
      const auto p = peirce_corner_product(R, f);
      if ((p.XY_zero || p.YX_zero) && !(p.X_in_J && p.Y_in_J))
        rep.failures.push_back({e->expr, idem(f), "XY = 0 or YX = 0 but X or Y not inside J(R)"});
    }
  }
}

inline void lemma_4_2(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.ring().order() <= 256; })) {
    const FiniteRing& R = e->ring();
    const auto local = idempotent_census(R).local;
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = i + 1; j < local.size(); ++j) {
        ++rep.instances_checked;
        const Index e1 = local[i], e2 = local[j];
        if (projectives_isomorphic(R, e1, e2)) continue;
        if (!set_in_radical(R, peirce_set(R, e1, e2)) || !set_in_radical(R, peirce_set(R, e2, e1)))
          rep.failures.push_back({e->expr, "e1=" + std::to_string(e1) + " e2=" + std::to_string(e2),
                                  "non-isomorphic local idempotents with e1Re2 or e2Re1 outside J(R)"});
      }
  }
}

inline void cor_4_3(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    const auto d = primitive_decomposition(R);
    if (d.idempotents.size() != 2) continue;
    ++rep.instances_checked;
    const Index e1 = d.idempotents[0], e2 = d.idempotents[1];
    const bool matrix = projectives_isomorphic(R, e1, e2) && corner_is_division(R, e1);
    auto hooked = [&](Index f, Index g) {
      return corner_is_division(R, f) && corner_is_local(R, g) &&
             products_vanish(R, peirce_set(R, f, g), peirce_set(R, g, f));
    };
    const bool expected = matrix || hooked(e1, e2) || hooked(e2, e1);
    const bool actual = vnl(R);
    if (actual != expected)
      rep.failures.push_back({e->expr, "e1=" + std::to_string(e1) + " e2=" + std::to_string(e2),
                              "VNL=" + verdict(actual) + ", expected " + verdict(expected)});
  }
}

inline void cor_4_4(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (primitive_decomposition(R).idempotents.size() != 3) continue;
    ++rep.instances_checked;
    const bool expected = radical_is_zero(R) || find_type_r1(R, R.one()) || find_type_r2(R, R.one());
    const bool actual = vnl(R);
    if (actual != expected)
      rep.failures.push_back({e->expr, "", "VNL=" + verdict(actual) + ", expected " + verdict(expected)});
  }
}

inline void lemma_4_5(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->tri && c.ring().order() <= 256; })) {
    const TriangularRing& T = *e->built->tri;
    for (Index a = 0; a < T.ring().order(); ++a)
      if (auto w = witness_unit_corner(T, T.decode(a))) {
        ++rep.instances_checked;
        if (T.ring().mul3(a, w->inner_inverse, a) != a)
          rep.failures.push_back({e->expr, elem(a), "unit-corner inner inverse formula fails"});
      }
  }
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.ring().order() <= 256; })) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    const auto shape = classify_semiperfect_vnl(R);
    const Index b = shape.remainder;
    if (shape.r1) {
      const Index eL = shape.r1->e_L;
      for (Index a = 0; a < R.order(); ++a) {
        if (R.mul3(b, a, b) != a || !corner_inverse(R, eL, R.mul3(eL, a, eL))) continue;
        ++rep.instances_checked;
        if (!is_regular(R, a))
          rep.failures.push_back({e->expr, elem(a), "unit in the local corner but element not regular"});
      }
    }
    if (shape.r2) {
      const Index eT = shape.r2->e_T, eD = shape.r2->e_D;
      for (Index a = 0; a < R.order(); ++a) {
        if (R.mul3(b, a, b) != a) continue;
        const Index t = R.mul3(eT, a, eT), d = R.mul3(eD, a, eD);
        const bool t_unit = corner_inverse(R, eT, t).has_value();
        if (!(t_unit || (is_regular(R, t) && d != R.zero()))) continue;
        ++rep.instances_checked;
        if (!is_regular(R, a))
          rep.failures.push_back({e->expr, elem(a), "t unit, or t regular with d != 0, but element not regular"});
        if (!corner_inverse(R, b, a)) continue;
        const auto inv = peirce_block_inverse(R, eT, eD, a);
        if (!inv) continue;
        if (R.mul(a, *inv) != b || R.mul(*inv, a) != b)
          rep.failures.push_back({e->expr, elem(a), "block inverse formula does not invert"});
      }
    }
  }
}

inline void thm_4_6(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    ++rep.instances_checked;
    const auto c = classify_semiperfect_vnl(R);
    const bool brute = vnl(R);
    if ((c.tag != VnlShape::NotVNL) != brute)
      throw InternalInconsistency("thm-4.6 on " + e->expr + ": classifier tag " + to_string(c.tag) +
                                  " but brute-force VNL=" + verdict(brute));
    if (!brute) {
      if (auto shape = find_semiperfect_shape(R))
        rep.failures.push_back({e->expr, elem(*c.not_vnl_witness),
                                std::string("not VNL yet decomposes as ") + to_string(shape->tag)});
    } else if (auto v = shape_violation(R, c); !v.empty()) {
      throw InternalInconsistency("thm-4.6 on " + e->expr + ": " + v);
    }
  }
}

inline void thm_4_7(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [&](const CorpusEntry& c) { return c.ring().order() <= ctx.budget.max_order; })) {
    if (!vnl(e->ring())) continue;
    ++rep.instances_checked;
    if (auto r = is_n_vnl(e->ring(), 2, ctx.budget); !r.holds)
      rep.failures.push_back({e->expr, "row=" + members_of(r.witness->elements),
                              "unimodular pair without a regular entry"});
  }
}

inline void thm_4_8(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!vnl(R)) continue;
    for (Index f : idempotents(R)) {
      if (f == R.zero() || !is_primitive(R, f) || corner_is_division(R, f)) continue;
      ++rep.instances_checked;
      const Index g = R.complement(f);
      const ElementSet X = peirce_set(R, f, g), Y = peirce_set(R, g, f);
      std::string broken;
      if (!corner_is_regular(R, g)) broken = "(1-e)R(1-e) is not regular";
      else if (!set_in_radical(R, X)) broken = "eR(1-e) not inside J(R)";
      else if (!set_in_radical(R, Y)) broken = "(1-e)Re not inside J(R)";
      else if (!products_vanish(R, Y, X)) broken = "(1-e)Re eR(1-e) is nonzero";
      if (!broken.empty()) rep.failures.push_back({e->expr, idem(f), broken});
    }
  }
}

inline void lemma_5_1(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    if (!nj_equivalence_hypotheses(R).applicable) continue;
    for (Index f : proper_idempotents(R)) {
      ++rep.instances_checked;
      const Index g = R.complement(f);
      if (!set_in_radical(R, peirce_set(R, f, g)) || !set_in_radical(R, peirce_set(R, g, f)))
        rep.failures.push_back({e->expr, idem(f), "eR(1-e) or (1-e)Re outside J(R)"});
    }
    const auto J = jacobson_radical(R).members().members();
    for (Index f : idempotents(R)) {
      if (f == R.zero()) continue;
      bool absorbs = true;
      for (Index a : J) absorbs = absorbs && R.mul(a, f) == a && R.mul(f, a) == a;
      if (!absorbs) continue;
      ++rep.instances_checked;
      if (f != R.one()) rep.failures.push_back({e->expr, idem(f), "e acts as identity on J(R) but e != 1"});
    }
  }
}

inline void prop_5_2(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const auto h = nj_equivalence_hypotheses(e->ring());
    if (!h.applicable) continue;
    ++rep.instances_checked;
    if (!h.conclusion_checked)
      rep.failures.push_back({e->expr, "",
                              "vnl=" + verdict(h.vnl) + " exchange=" + verdict(h.exchange) + " potent=" +
                                  verdict(h.potent) + " semipotent=" + verdict(h.semipotent) + " nj=" + verdict(h.nj)});
  }
}

inline void implication_chain(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, all)) {
    const FiniteRing& R = e->ring();
    ++rep.instances_checked;
    const bool nj = is_nj(R).holds, v = vnl(R), ex = is_exchange_ring(R).holds;
    const bool potent = is_potent(R).holds, semi = is_semipotent(R).holds;
    std::string broken;
    if (nj && !v) broken = "NJ but not VNL";
    else if (!ex) broken = "finite ring not exchange";
    else if (!potent) broken = "finite ring not potent";
    else if (!semi) broken = "finite ring not semipotent";
    if (!broken.empty()) rep.failures.push_back({e->expr, "", broken});
  }
}

inline void product_law(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.built->product.has_value(); })) {
    const auto& factors = e->built->product->factors;
    if (factors.size() != 2) continue;
    ++rep.instances_checked;
    const FiniteRing &S = factors[0], &T = factors[1];
    const bool expected = (ring_is_regular(S) && vnl(T)) || (vnl(S) && ring_is_regular(T));
    const bool actual = vnl(e->ring());
    if (actual != expected)
      rep.failures.push_back({e->expr, "", "VNL=" + verdict(actual) + ", expected " + verdict(expected)});
  }
}

inline void example_2_1_3(SuiteContext& ctx, Report& rep) {
  for (const auto* e : select(ctx, [](const CorpusEntry& c) { return c.expr.rfind("Zn(", 0) == 0; })) {
    ++rep.instances_checked;
    const Index n = e->ring().order();
    const bool fast = zn_vnl_criterion(n), brute = vnl(e->ring());
    if (fast != brute)
      throw InternalInconsistency("example-2.1-3 on " + e->expr + ": square-of-two-primes test says " +
                                  verdict(fast) + ", brute force says " + verdict(brute));
  }
}

}  // namespace checks

using CheckFn = void (*)(SuiteContext&, TheoremReport&);

struct RegistryEntry {
  const char* id;
  const char* description;
  CheckFn run;
};

inline const std::vector<RegistryEntry>& registry() {
  using namespace checks;
  static const std::vector<RegistryEntry> r{
      {"prop-2.2", "center of a VNL ring is VNL", prop_2_2},
      {"cor-2.3", "VNL ring indecomposable iff its center is local", cor_2_3},
      {"lemma-2.4", "VNL: eRe or (1-e)R(1-e) regular for every idempotent e", lemma_2_4},
      {"cor-2.6", "M_2(R) VNL iff R regular", cor_2_6},
      {"cor-2.7", "abelian VNL: unimodular rows (n <= 3) have a regular entry", cor_2_7},
      {"prop-2.8", "triangular regularity via idempotents agrees with brute force", prop_2_8},
      {"prop-2.11", "column module over M_2(F_q) is not partial", prop_2_11},
      {"thm-2.12", "triangular VNL criterion agrees with brute force", thm_2_12},
      {"cor-2.13", "T_n(D) VNL iff n in {2,3}; T_2(Z_4) not VNL", cor_2_13},
      {"cor-2.14", "regular R, local S gives VNL; last-column instance VNL", cor_2_14},
      {"cor-2.15", "simple R, S: VNL iff M = 0 or one side division", cor_2_15},
      {"cor-2.16", "commutative Tri(R,I,R) VNL iff R = F x S, I = F x 0", cor_2_16},
      {"cor-2.17", "Tri(R,I,R) VNL iff R = D x S semisimple, I = D x 0", cor_2_17},
      {"lemma-2.18", "corners of VNL rings are VNL", lemma_2_18},
      {"thm-3.1", "abelian: VNL iff corner condition", thm_3_1},
      {"lemma-3.4", "I regular: R VNL iff R/I VNL", lemma_3_4},
      {"thm-3.5", "abelian: VNL iff R/M(R) local", thm_3_5},
      {"example-3.3", "M(T_2(D)) = 0", example_3_3},
      {"lemma-4.1", "XY = 0 or YX = 0 forces X, Y inside J", lemma_4_1},
      {"lemma-4.2", "local idempotents: isomorphic or cross corners inside J", lemma_4_2},
      {"cor-4.3", "two primitive idempotents: VNL iff M_2(D) or [[D,X],[Y,L]] with XY = 0", cor_4_3},
      {"cor-4.4", "three primitive idempotents: VNL iff M_3(D), R1 or R2", cor_4_4},
      {"lemma-4.5", "unit-corner regularity and block inverse formulas", lemma_4_5},
      {"thm-4.6", "semiperfect VNL iff A x B with B semisimple, R1 or R2", thm_4_6},
      {"thm-4.7", "semiperfect VNL rings are 2-VNL", thm_4_7},
      {"thm-4.8", "primitive e with eRe not division: Peirce form", thm_4_8},
      {"lemma-5.1", "off-diagonal Peirce pieces inside J; identity on J is 1", lemma_5_1},
      {"prop-5.2", "VNL, exchange, potent, semipotent, NJ coincide", prop_5_2},
      {"implication-chain", "NJ => VNL => exchange => potent => semipotent", implication_chain},
      {"product-law", "S x T VNL iff one factor regular and the other VNL", product_law},
      {"example-2.1-3", "Z_n VNL iff no (pq)^2 divides n", example_2_1_3},
  };
  return r;
}

inline std::string registry_ids() {
  std::string out;
  for (const auto& e : registry()) out += (out.empty() ? "" : ", ") + std::string(e.id);
  return out;
}

inline const RegistryEntry& find_check(const std::string& id) {
  for (const auto& e : registry())
    if (id == e.id) return e;
  throw InvalidParameter("unknown theorem id '" + id + "'; registry: " + registry_ids());
}

/// "all" expands to the whole registry. Ids are validated before any check runs.
inline std::vector<TheoremReport> run_theorem_suite(const std::vector<std::string>& ids, SuiteContext& ctx) {
  std::vector<const RegistryEntry*> plan;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& e : registry()) plan.push_back(&e);
    } else {
      plan.push_back(&find_check(id));
    }
  }
  std::vector<TheoremReport> reports;
  for (const auto* entry : plan) {
    TheoremReport rep;
    rep.theorem_id = entry->id;
    rep.corpus_description = std::string(to_string(ctx.corpus.profile)) + " corpus, " +
                             std::to_string(ctx.corpus.entries.size()) + " rings";
    const auto start = std::chrono::steady_clock::now();
    entry->run(ctx, rep);
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace vnl::harness
