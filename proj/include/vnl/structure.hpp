#pragma once

// Ring-level invariants: Jacobson radical, idempotent census, ideals,
// the maximal regular ideal M(R), primitive decompositions, isomorphism of
// principal projectives and Peirce data.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vnl/constructions.hpp"
#include "vnl/elements.hpp"
#include "vnl/ideal.hpp"

namespace vnl {

/// Radical membership flags: a in J(R) iff 1 - r a is a unit for every r.
inline const std::vector<std::uint8_t>& radical_flags(const FiniteRing& R) {
  return R.cache().radical.get([&] {
    const auto& inverse = unit_inverses(R);
    std::vector<std::uint8_t> flags(R.order(), 0);
    for (Index a = 0; a < R.order(); ++a) {
      bool quasi_regular = true;
      for (Index r = 0; r < R.order() && quasi_regular; ++r)
        quasi_regular = inverse[R.complement(R.mul(r, a))] != kNone;
      flags[a] = quasi_regular;
    }
    return flags;
  });
}

inline bool in_radical(const FiniteRing& R, Index a) { return radical_flags(R)[a] != 0; }

inline SubsetIdeal jacobson_radical(const FiniteRing& R) {
  ElementSet members(R.order());
  for (Index a = 0; a < R.order(); ++a)
    if (in_radical(R, a)) members.insert(a);
  return SubsetIdeal(R, std::move(members), Sidedness::TwoSided, "J");
}

inline bool radical_is_zero(const FiniteRing& R) {
  for (Index a = 0; a < R.order(); ++a)
    if (a != R.zero() && in_radical(R, a)) return false;
  return true;
}

inline bool set_in_radical(const FiniteRing& R, const ElementSet& set) {
  for (Index a : set.members())
    if (!in_radical(R, a)) return false;
  return true;
}

inline bool is_central(const FiniteRing& R, Index z) {
  for (Index r = 0; r < R.order(); ++r)
    if (R.mul(z, r) != R.mul(r, z)) return false;
  return true;
}

/// f lies in eRe (for idempotent e) iff e f = f = f e.
inline bool in_corner(const FiniteRing& R, Index e, Index f) {
  return R.mul(e, f) == f && R.mul(f, e) == f;
}

/// Idempotents of eRe other than 0 and e, in index order.
inline std::vector<Index> proper_corner_idempotents(const FiniteRing& R, Index e) {
  std::vector<Index> out;
  for (Index f : idempotents(R))
    if (f != R.zero() && f != e && in_corner(R, e, f)) out.push_back(f);
  return out;
}

inline bool is_primitive(const FiniteRing& R, Index e) {
  return e != R.zero() && proper_corner_idempotents(R, e).empty();
}

/// x in eRe is a unit of eRe.
inline bool is_corner_unit(const FiniteRing& R, Index e, Index x, const ElementSet& corner) {
  for (Index y : corner.members())
    if (R.mul(x, y) == e && R.mul(y, x) == e) return true;
  return false;
}

/// eRe is local: for every x in eRe, x or e - x is a unit of eRe. The zero
/// corner counts as local.
inline bool corner_is_local(const FiniteRing& R, Index e) {
  const ElementSet corner = corner_set(R, e);
  for (Index x : corner.members())
    if (!is_corner_unit(R, e, x, corner) && !is_corner_unit(R, e, R.sub(e, x), corner))
      return false;
  return true;
}

struct IdempotentCensus {
  std::vector<Index> all;
  std::vector<Index> central;
  std::vector<Index> primitive;
  std::vector<Index> local;  // nonzero e with eRe local
};

inline IdempotentCensus idempotent_census(const FiniteRing& R) {
  IdempotentCensus census;
  census.all = idempotents(R);
  for (Index e : census.all) {
    if (is_central(R, e)) census.central.push_back(e);
    if (is_primitive(R, e)) {
      census.primitive.push_back(e);
      // local corners have no nontrivial idempotents, so only primitive
      // idempotents can be local
      if (corner_is_local(R, e)) census.local.push_back(e);
    }
  }
  return census;
}

inline bool has_nontrivial_central_idempotent(const FiniteRing& R) {
  for (Index e : idempotents(R))
    if (e != R.zero() && e != R.one() && is_central(R, e)) return true;
  return false;
}

struct RingFlags {
  bool regular = false;
  bool local = false;
  bool division = false;
  bool semisimple = false;
  bool abelian = false;
  bool commutative = false;
  bool has_nontrivial_central_idempotent = false;
};

inline bool ring_is_regular(const FiniteRing& R) {
  const auto& inner = inner_inverses(R);
  return std::none_of(inner.begin(), inner.end(), [](Index x) { return x == kNone; });
}

/// Non-units form an ideal. In a finite ring a product with a non-unit is a
/// non-unit, so additive closure of the non-units decides it. The zero ring
/// is counted as local.
inline bool ring_is_local(const FiniteRing& R) {
  if (R.is_zero_ring()) return true;
  std::vector<Index> non_units;
  for (Index a = 0; a < R.order(); ++a)
    if (!is_unit(R, a)) non_units.push_back(a);
  for (Index a : non_units)
    for (Index b : non_units)
      if (is_unit(R, R.add(a, b))) return false;
  return true;
}

inline bool ring_is_division(const FiniteRing& R) {
  if (R.is_zero_ring()) return false;
  for (Index a = 0; a < R.order(); ++a)
    if (a != R.zero() && !is_unit(R, a)) return false;
  return true;
}

inline bool ring_is_commutative(const FiniteRing& R) {
  for (Index a = 0; a < R.order(); ++a)
    for (Index b = a + 1; b < R.order(); ++b)
      if (R.mul(a, b) != R.mul(b, a)) return false;
  return true;
}

inline bool ring_is_abelian(const FiniteRing& R) {
  for (Index e : idempotents(R))
    if (!is_central(R, e)) return false;
  return true;
}

inline RingFlags classify_ring(const FiniteRing& R) {
  RingFlags flags;
  flags.regular = ring_is_regular(R);
  flags.local = ring_is_local(R);
  flags.division = ring_is_division(R);
  flags.semisimple = radical_is_zero(R);
  flags.abelian = ring_is_abelian(R);
  flags.commutative = ring_is_commutative(R);
  flags.has_nontrivial_central_idempotent = has_nontrivial_central_idempotent(R);
  return flags;
}

/// Every element of eRe is regular in R. For x in eRe with x y x = x, the
/// element e y e lies in eRe and is also an inner inverse, so this is the
/// same as eRe being a regular ring.
inline bool corner_is_regular(const FiniteRing& R, Index e) {
  for (Index x : corner_set(R, e).members())
    if (!is_regular(R, x)) return false;
  return true;
}

/// J(eRe) = eJe, so eRe is semisimple iff no nonzero element of eRe lies in J(R).
inline bool corner_is_semisimple(const FiniteRing& R, Index e) {
  for (Index x : corner_set(R, e).members())
    if (x != R.zero() && in_radical(R, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ideals

inline SubsetIdeal ideal_generated(const FiniteRing& R, Index a) {
  ElementSet products(R.order());
  for (Index r = 0; r < R.order(); ++r) {
    const Index ra = R.mul(r, a);
    for (Index s = 0; s < R.order(); ++s) products.insert(R.mul(ra, s));
  }
  return SubsetIdeal(R, additive_closure(R, products), Sidedness::TwoSided, std::to_string(a));
}

inline bool is_regular_ideal(const SubsetIdeal& ideal) {
  if (ideal.side() != Sidedness::TwoSided)
    throw InvalidParameter("regularity of ideals is defined for two-sided ideals");
  for (Index a : ideal.members().members())
    if (!is_regular(ideal.ring(), a)) return false;
  return true;
}

/// Sum of every regular principal two-sided ideal. Regular ideals are
/// closed under sums, so the result is the largest regular ideal.
inline SubsetIdeal maximal_regular_ideal(const FiniteRing& R) {
  ElementSet sum(R.order());
  sum.insert(R.zero());
  for (Index a = 0; a < R.order(); ++a) {
    if (sum.contains(a) || !is_regular(R, a)) continue;
    // reject early if some r a s is not regular
    bool regular = true;
    for (Index r = 0; r < R.order() && regular; ++r) {
      const Index ra = R.mul(r, a);
      for (Index s = 0; s < R.order() && regular; ++s) regular = is_regular(R, R.mul(ra, s));
    }
    if (!regular) continue;
    const SubsetIdeal principal = ideal_generated(R, a);
    if (!is_regular_ideal(principal)) continue;
    sum = subgroup_sum(R, sum, principal.members());
  }
  SubsetIdeal result(R, std::move(sum), Sidedness::TwoSided, "M");
  if (!is_regular_ideal(result))
    throw InternalInconsistency("sum of regular ideals of " + R.label() + " is not regular");
  return result;
}

/// Exhaustive oracle for M(R): enumerates every subset containing zero,
/// keeps the two-sided ideals I in which every a has x in I with a x a = a,
/// and returns the union provided it is itself such an ideal.
inline SubsetIdeal maximal_regular_ideal_exhaustive(const FiniteRing& R, Index max_order = 16) {
  const Index n = R.order();
  if (n > max_order)
    throw CapacityError("exhaustive ideal lattice limited to order " + std::to_string(max_order));
  std::vector<Index> others;
  for (Index a = 0; a < n; ++a)
    if (a != R.zero()) others.push_back(a);
  ElementSet best(n);
  best.insert(R.zero());
  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  std::vector<ElementSet> regular_ideals;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ElementSet s(n);
    s.insert(R.zero());
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1) s.insert(others[i]);
    if (n % s.size() != 0) continue;
    const auto list = s.members();
    bool ok = true;
    for (Index a : list) {
      for (Index b : list)
        if (!s.contains(R.add(a, b))) { ok = false; break; }
      if (!ok) break;
      for (Index r = 0; r < n && ok; ++r) ok = s.contains(R.mul(r, a)) && s.contains(R.mul(a, r));
      if (!ok) break;
    }
    if (!ok) continue;
    for (Index a : list) {
      bool found = false;
      for (Index x : list)
        if (R.mul3(a, x, a) == a) { found = true; break; }
      if (!found) { ok = false; break; }
    }
    if (!ok) continue;
    regular_ideals.push_back(s);
  }
  for (const auto& s : regular_ideals)
    for (Index a : s.members()) best.insert(a);
  const bool union_is_member =
      std::any_of(regular_ideals.begin(), regular_ideals.end(), [&](const ElementSet& s) { return s == best; });
  if (!union_is_member)
    throw InternalInconsistency("regular ideals of " + R.label() + " have no largest element");
  return SubsetIdeal(R, std::move(best), Sidedness::TwoSided, "M");
}

// ---------------------------------------------------------------------------
// Idempotent decompositions

struct PrimitiveDecomposition {
  std::vector<Index> idempotents;
};

/// Repeatedly splits the first non-primitive idempotent e into (f, e - f)
/// using the least nontrivial idempotent f of eRe. The zero ring yields an
/// empty decomposition.
inline PrimitiveDecomposition primitive_decomposition(const FiniteRing& R) {
  PrimitiveDecomposition out;
  if (R.is_zero_ring()) return out;
  std::vector<Index> parts{R.one()};
  for (;;) {
    bool split = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto proper = proper_corner_idempotents(R, parts[i]);
      if (proper.empty()) continue;
      const Index e = parts[i];
      const Index f = proper.front();
      parts[i] = f;
      parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, R.sub(e, f));
      split = true;
      break;
    }
    if (!split) break;
  }
  out.idempotents = std::move(parts);
  return out;
}

/// Re-checks orthogonality, primitivity and the sum.
inline std::string decomposition_violation(const FiniteRing& R, const PrimitiveDecomposition& d) {
  Index sum = R.zero();
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    const Index e = d.idempotents[i];
    if (!is_idempotent(R, e)) return "element " + std::to_string(e) + " is not idempotent";
    if (!is_primitive(R, e)) return "idempotent " + std::to_string(e) + " is not primitive";
    for (std::size_t j = 0; j < d.idempotents.size(); ++j)
      if (i != j && R.mul(e, d.idempotents[j]) != R.zero())
        return "idempotents " + std::to_string(e) + " and " + std::to_string(d.idempotents[j]) +
               " are not orthogonal";
    sum = R.add(sum, e);
  }
  if (!R.is_zero_ring() && sum != R.one()) return "idempotents do not sum to one";
  return {};
}

/// eR ~= fR iff there are x in eRf, y in fRe with x y = e and y x = f.
inline bool projectives_isomorphic(const FiniteRing& R, Index e, Index f) {
  if (!is_idempotent(R, e) || !is_idempotent(R, f))
    throw InvalidParameter("projectives_isomorphic needs idempotents");
  const auto eRf = peirce_set(R, e, f).members();
  const auto fRe = peirce_set(R, f, e).members();
  for (Index x : eRf)
    for (Index y : fRe)
      if (R.mul(x, y) == e && R.mul(y, x) == f) return true;
  return false;
}

inline bool products_vanish(const FiniteRing& R, const ElementSet& A, const ElementSet& B) {
  const auto a_list = A.members();
  const auto b_list = B.members();
  for (Index a : a_list)
    for (Index b : b_list)
      if (R.mul(a, b) != R.zero()) return false;
  return true;
}

struct PeirceData {
  Index idempotent;
  ElementSet X;  // eR(1-e)
  ElementSet Y;  // (1-e)Re
  bool XY_zero;
  bool YX_zero;
  bool X_in_J;
  bool Y_in_J;
};

inline PeirceData peirce_corner_product(const FiniteRing& R, Index e) {
  if (!is_idempotent(R, e)) throw InvalidParameter("Peirce data needs an idempotent");
  const Index f = R.complement(e);
  PeirceData d{e, peirce_set(R, e, f), peirce_set(R, f, e), false, false, false, false};
  d.XY_zero = products_vanish(R, d.X, d.Y);
  d.YX_zero = products_vanish(R, d.Y, d.X);
  d.X_in_J = set_in_radical(R, d.X);
  d.Y_in_J = set_in_radical(R, d.Y);
  return d;
}

}  // namespace vnl
