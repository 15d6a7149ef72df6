#pragma once

// Ring-level deciders: VNL, NJ, exchange, potent, semipotent, n-VNL, the
// abelian fast paths, and the semiperfect VNL classifier.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vnl/constructions.hpp"
#include "vnl/elements.hpp"
#include "vnl/structure.hpp"

namespace vnl {

struct Witness {
  std::vector<Index> elements;
  std::string note;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
  std::string method = "brute-force";
};

/// Configuration used for rings built internally during an analysis
/// (corners, quotients). They are correct by construction.
inline RingConfig analysis_config(RingConfig cfg = {}) {
  cfg.validate = false;
  return cfg;
}

inline PropertyReport fail(std::string property, std::vector<Index> elements, std::string note,
                           std::string method = "brute-force") {
  return {std::move(property), false, Witness{std::move(elements), std::move(note)},
          std::move(method)};
}

/// Every a has a or 1 - a regular.
inline PropertyReport is_vnl(const FiniteRing& R) {
  for (Index a = 0; a < R.order(); ++a)
    if (!is_regular(R, a) && !is_regular(R, R.complement(a)))
      return fail("vnl", {a}, "a and 1-a are both non-regular");
  return {"vnl", true, std::nullopt, "brute-force"};
}

/// Z_n is VNL iff no (pq)^2 with distinct primes p, q divides n, i.e. at
/// most one prime divides n to a power >= 2.
inline bool zn_vnl_criterion(Index n) {
  if (n == 0) throw InvalidParameter("zn_vnl_criterion requires n >= 1");
  int squared_primes = 0;
  for (Index p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    if (exponent >= 2) ++squared_primes;
  }
  return squared_primes <= 1;
}

/// Every element outside J(R) is regular.
inline PropertyReport is_nj(const FiniteRing& R) {
  for (Index a = 0; a < R.order(); ++a)
    if (!in_radical(R, a) && !is_regular(R, a))
      return fail("nj", {a}, "element outside J(R) is not regular");
  return {"nj", true, std::nullopt, "brute-force"};
}

inline PropertyReport is_exchange_ring(const FiniteRing& R) {
  for (Index a = 0; a < R.order(); ++a)
    if (!exchange_witness(R, a))
      return fail("exchange", {a}, "no idempotent e in aR with 1-e in (1-a)R");
  return {"exchange", true, std::nullopt, "brute-force"};
}

/// Every right ideal not inside J(R) contains a nonzero idempotent, decided
/// on principal right ideals aR with a outside J(R).
inline PropertyReport is_semipotent(const FiniteRing& R) {
  const auto& idem = idempotents(R);
  for (Index a = 0; a < R.order(); ++a) {
    if (in_radical(R, a)) continue;
    const ElementSet aR = principal_right_ideal(R, a);
    bool found = false;
    for (Index e : idem)
      if (e != R.zero() && aR.contains(e)) {
        found = true;
        break;
      }
    if (!found) return fail("semipotent", {a}, "aR has no nonzero idempotent although a is not in J(R)");
  }
  return {"semipotent", true, std::nullopt, "brute-force"};
}

/// Semipotent, and idempotents lift modulo J(R).
inline PropertyReport is_potent(const FiniteRing& R) {
  auto semi = is_semipotent(R);
  if (!semi.holds) {
    semi.property = "potent";
    return semi;
  }
  const auto& idem = idempotents(R);
  for (Index a = 0; a < R.order(); ++a) {
    if (!in_radical(R, R.sub(R.mul(a, a), a))) continue;
    bool lifted = false;
    for (Index e : idem)
      if (in_radical(R, R.sub(e, a))) {
        lifted = true;
        break;
      }
    if (!lifted) return fail("potent", {a}, "a^2-a in J(R) but no idempotent e with e-a in J(R)");
  }
  return {"potent", true, std::nullopt, "brute-force"};
}

struct NVnlBudget {
  Index max_order = 64;
};

/// Whenever a_1 R + ... + a_n R = R some a_i is regular. Tuples with a
/// regular entry satisfy this vacuously and are skipped; the scan runs over
/// nondecreasing tuples of non-regular elements (the condition does not
/// depend on order or repetition).
inline PropertyReport is_n_vnl(const FiniteRing& R, Index n, NVnlBudget budget = {}) {
  const std::string name = std::to_string(n) + "-vnl";
  if (n == 0) throw InvalidParameter("n-VNL requires n >= 1");
  if (R.order() > budget.max_order)
    throw CapacityError(name + " scan of " + R.label() + " (order " + std::to_string(R.order()) +
                        ") exceeds the budget order " + std::to_string(budget.max_order));
  std::vector<Index> candidates;
  std::vector<ElementSet> right_ideals;
  for (Index a = 0; a < R.order(); ++a)
    if (!is_regular(R, a)) {
      candidates.push_back(a);
      right_ideals.push_back(principal_right_ideal(R, a));
    }
  std::vector<Index> tuple;
  std::function<bool(std::size_t, const ElementSet&)> search = [&](std::size_t start,
                                                                   const ElementSet& partial) {
    if (tuple.size() == n) return partial.contains(R.one());
    for (std::size_t i = start; i < candidates.size(); ++i) {
      tuple.push_back(candidates[i]);
      const ElementSet next = tuple.size() == 1 ? right_ideals[i]
                                                : subgroup_sum(R, partial, right_ideals[i]);
      if (search(i, next)) return true;
      tuple.pop_back();
    }
    return false;
  };
  if (search(0, ElementSet(R.order())))
    return fail(name, tuple, "unimodular row with no regular entry");
  return {name, true, std::nullopt, "brute-force"};
}

/// Exchange, and for every idempotent e one of eRe, (1-e)R(1-e) is a
/// regular ring. Characterizes VNL among abelian rings.
inline PropertyReport vnl_via_corner_condition(const FiniteRing& R) {
  const std::string method = "corner-condition";
  auto exchange = is_exchange_ring(R);
  if (!exchange.holds) {
    exchange.property = "vnl";
    exchange.method = method;
    return exchange;
  }
  const auto cfg = analysis_config();
  for (Index e : idempotents(R)) {
    const auto corner = build_corner(R, e, cfg);
    if (ring_is_regular(corner.ring)) continue;
    const auto opposite = build_corner(R, R.complement(e), cfg);
    if (!ring_is_regular(opposite.ring))
      return fail("vnl", {e}, "neither eRe nor (1-e)R(1-e) is regular", method);
  }
  return {"vnl", true, std::nullopt, method};
}

/// R/M(R) is local (zero ring counted local). Characterizes VNL among
/// abelian rings. A failure carries two elements whose images are non-units
/// of R/M(R) with a unit sum.
inline PropertyReport vnl_via_mr_local(const FiniteRing& R) {
  const std::string method = "mr-local";
  const auto M = maximal_regular_ideal(R);
  const auto Q = build_quotient(R, M, analysis_config());
  if (ring_is_local(Q.ring)) return {"vnl", true, std::nullopt, method};
  for (Index x = 0; x < Q.ring.order(); ++x) {
    if (is_unit(Q.ring, x)) continue;
    for (Index y = 0; y < Q.ring.order(); ++y)
      if (!is_unit(Q.ring, y) && is_unit(Q.ring, Q.ring.add(x, y)))
        return fail("vnl", {Q.lift(x), Q.lift(y)},
                    "images in R/M(R) are non-units with a unit sum", method);
  }
  throw InternalInconsistency("R/M(R) of " + R.label() + " is not local but no witness found");
}

// ---------------------------------------------------------------------------
// Semiperfect classification

enum class VnlShape { NotVNL, Semisimple, TypeR1, TypeR2, ProductWithSemisimple };

inline const char* to_string(VnlShape s) {
  switch (s) {
    case VnlShape::NotVNL: return "NotVNL";
    case VnlShape::Semisimple: return "Semisimple";
    case VnlShape::TypeR1: return "TypeR1";
    case VnlShape::TypeR2: return "TypeR2";
    case VnlShape::ProductWithSemisimple: return "ProductWithSemisimple";
  }
  return "?";
}

/// B = [[S, X], [Y, L]] with S = eS R eS semisimple, L = eL R eL local,
/// X = eS R eL, Y = eL R eS and XY = 0.
struct TypeR1Data {
  Index e_S;
  Index e_L;
  std::size_t S_order, L_order, X_order, Y_order;
  bool XY_zero, YX_zero;
};

/// B = [[T, X], [Y, D]] with T = eT R eT an NJ ring split by two orthogonal
/// primitive idempotents f1 + f2 = eT with division corners, D = eD R eD a
/// division ring, X = eT R eD, Y = eD R eT and YX = 0.
struct TypeR2Data {
  Index e_T;
  Index e_D;
  Index f1, f2;
  std::size_t T_order, D_order, X_order, Y_order;
  bool YX_zero, XY_zero;
};

struct SemiperfectVnlClass {
  VnlShape tag = VnlShape::NotVNL;
  Index semisimple_part = 0;  // central idempotent a with aRa the semisimple factor A
  Index remainder = 0;        // b = 1 - a
  std::optional<TypeR1Data> r1;
  std::optional<TypeR2Data> r2;
  std::optional<Index> not_vnl_witness;
};

/// Minimal nonzero central idempotents (block idempotents), index order.
inline std::vector<Index> block_idempotents(const FiniteRing& R) {
  std::vector<Index> central;
  for (Index e : idempotents(R))
    if (e != R.zero() && is_central(R, e)) central.push_back(e);
  std::vector<Index> blocks;
  for (Index c : central) {
    bool minimal = true;
    for (Index f : central)
      if (f != c && R.mul(f, c) == f) {
        minimal = false;
        break;
      }
    if (minimal) blocks.push_back(c);
  }
  return blocks;
}

inline std::optional<TypeR1Data> find_type_r1(const FiniteRing& R, Index b) {
  for (Index eL : idempotents(R)) {
    if (eL == R.zero() || !in_corner(R, b, eL) || !corner_is_local(R, eL)) continue;
    const Index eS = R.sub(b, eL);
    if (!corner_is_semisimple(R, eS)) continue;
    const ElementSet X = peirce_set(R, eS, eL);
    const ElementSet Y = peirce_set(R, eL, eS);
    if (!products_vanish(R, X, Y)) continue;
    return TypeR1Data{eS, eL, corner_set(R, eS).size(), corner_set(R, eL).size(),
                      X.size(), Y.size(), true, products_vanish(R, Y, X)};
  }
  return std::nullopt;
}

inline bool corner_is_division(const FiniteRing& R, Index e) {
  if (e == R.zero()) return false;
  const ElementSet corner = corner_set(R, e);
  for (Index x : corner.members())
    if (x != R.zero() && !is_corner_unit(R, e, x, corner)) return false;
  return true;
}

/// Every element of eRe outside J(eRe) = eRe n J(R) is regular.
inline bool corner_is_nj(const FiniteRing& R, Index e) {
  for (Index x : corner_set(R, e).members())
    if (!in_radical(R, x) && !is_regular(R, x)) return false;
  return true;
}

inline std::optional<TypeR2Data> find_type_r2(const FiniteRing& R, Index b) {
  for (Index eD : idempotents(R)) {
    if (eD == R.zero() || !in_corner(R, b, eD) || !corner_is_division(R, eD)) continue;
    const Index eT = R.sub(b, eD);
    if (eT == R.zero() || !corner_is_nj(R, eT)) continue;
    std::optional<Index> split;
    for (Index f1 : proper_corner_idempotents(R, eT)) {
      const Index f2 = R.sub(eT, f1);
      if (corner_is_division(R, f1) && corner_is_division(R, f2)) {
        split = f1;
        break;
      }
    }
    if (!split) continue;
    const ElementSet X = peirce_set(R, eT, eD);
    const ElementSet Y = peirce_set(R, eD, eT);
    if (!products_vanish(R, Y, X)) continue;
    return TypeR2Data{eT, eD, *split, R.sub(eT, *split), corner_set(R, eT).size(),
                      corner_set(R, eD).size(), X.size(), Y.size(), true,
                      products_vanish(R, X, Y)};
  }
  return std::nullopt;
}

/// Re-verifies returned Peirce data inside the ring; empty when consistent.
inline std::string shape_violation(const FiniteRing& R, const SemiperfectVnlClass& c) {
  const Index a = c.semisimple_part, b = c.remainder;
  if (!is_idempotent(R, a) || !is_central(R, a)) return "semisimple part is not a central idempotent";
  if (R.add(a, b) != R.one()) return "split does not sum to one";
  if (!corner_is_semisimple(R, a)) return "factor A is not semisimple";
  auto orthogonal_pair = [&](Index e, Index f) {
    return is_idempotent(R, e) && is_idempotent(R, f) && R.mul(e, f) == R.zero() &&
           R.mul(f, e) == R.zero() && R.add(e, f) == b;
  };
  if (c.r1) {
    const auto& d = *c.r1;
    if (!orthogonal_pair(d.e_S, d.e_L)) return "R1 idempotents do not split b";
    if (!corner_is_semisimple(R, d.e_S)) return "R1 corner S is not semisimple";
    if (!corner_is_local(R, d.e_L)) return "R1 corner L is not local";
    const ElementSet X = peirce_set(R, d.e_S, d.e_L), Y = peirce_set(R, d.e_L, d.e_S);
    if (!products_vanish(R, X, Y)) return "R1 product XY is nonzero";
    if (!set_in_radical(R, X) || !set_in_radical(R, Y)) return "R1 off-diagonal pieces not in J(R)";
  }
  if (c.r2) {
    const auto& d = *c.r2;
    if (!orthogonal_pair(d.e_T, d.e_D)) return "R2 idempotents do not split b";
    if (!corner_is_division(R, d.e_D)) return "R2 corner D is not a division ring";
    if (!corner_is_nj(R, d.e_T)) return "R2 corner T is not NJ";
    if (R.add(d.f1, d.f2) != d.e_T || R.mul(d.f1, d.f2) != R.zero() ||
        !corner_is_division(R, d.f1) || !corner_is_division(R, d.f2))
      return "R2 corner T is not split by two division corners";
    const ElementSet X = peirce_set(R, d.e_T, d.e_D), Y = peirce_set(R, d.e_D, d.e_T);
    if (!products_vanish(R, Y, X)) return "R2 product YX is nonzero";
    if (!set_in_radical(R, X) || !set_in_radical(R, Y)) return "R2 off-diagonal pieces not in J(R)";
  }
  return {};
}

/// Searches for the A x B decomposition with B semisimple, R1 or R2,
/// regardless of whether R is VNL. Tag is never NotVNL on success.
inline std::optional<SemiperfectVnlClass> find_semiperfect_shape(const FiniteRing& R) {
  SemiperfectVnlClass c;
  Index a = R.zero();
  for (Index block : block_idempotents(R))
    if (corner_is_semisimple(R, block)) a = R.add(a, block);
  const Index b = R.complement(a);
  c.semisimple_part = a;
  c.remainder = b;
  if (b == R.zero()) {
    c.tag = VnlShape::Semisimple;
    return c;
  }
  const VnlShape tag = a == R.zero() ? VnlShape::TypeR1 : VnlShape::ProductWithSemisimple;
  if (auto r1 = find_type_r1(R, b)) {
    c.tag = tag;
    c.r1 = r1;
    return c;
  }
  if (auto r2 = find_type_r2(R, b)) {
    c.tag = a == R.zero() ? VnlShape::TypeR2 : VnlShape::ProductWithSemisimple;
    c.r2 = r2;
    return c;
  }
  return std::nullopt;
}

inline SemiperfectVnlClass classify_semiperfect_vnl(const FiniteRing& R) {
  const auto vnl = is_vnl(R);
  if (!vnl.holds) {
    SemiperfectVnlClass c;
    c.tag = VnlShape::NotVNL;
    c.not_vnl_witness = vnl.witness->elements.front();
    return c;
  }
  auto shape = find_semiperfect_shape(R);
  if (!shape)
    throw InternalInconsistency("VNL ring " + R.label() +
                                " admits no semisimple, R1 or R2 decomposition");
  if (auto violation = shape_violation(R, *shape); !violation.empty())
    throw InternalInconsistency("classification of " + R.label() + " failed re-check: " + violation);
  return *shape;
}

// ---------------------------------------------------------------------------

struct NjEquivalence {
  bool applicable = false;
  bool conclusion_checked = false;
  bool vnl = false, exchange = false, potent = false, semipotent = false, nj = false;
};

/// Hypotheses: no nontrivial central idempotent, J(R) != 0, and J(eRe) = 0
/// for every idempotent e other than 0 and 1. When they hold, checks that
/// VNL, exchange, potent, semipotent and NJ all agree.
inline NjEquivalence nj_equivalence_hypotheses(const FiniteRing& R) {
  NjEquivalence out;
  if (has_nontrivial_central_idempotent(R) || radical_is_zero(R)) return out;
  for (Index e : idempotents(R))
    if (e != R.zero() && e != R.one() && !corner_is_semisimple(R, e)) return out;
  out.applicable = true;
  out.vnl = is_vnl(R).holds;
  out.exchange = is_exchange_ring(R).holds;
  out.potent = is_potent(R).holds;
  out.semipotent = is_semipotent(R).holds;
  out.nj = is_nj(R).holds;
  out.conclusion_checked = out.vnl == out.exchange && out.exchange == out.potent &&
                           out.potent == out.semipotent && out.semipotent == out.nj;
  return out;
}

}  // namespace vnl
