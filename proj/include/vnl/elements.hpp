#pragma once

// Element-level properties decided by exhaustive search. All witnesses are
// the least qualifying element index.

#include <optional>
#include <span>
#include <vector>

#include "vnl/element_set.hpp"
#include "vnl/ring.hpp"

namespace vnl {

struct RegularityWitness {
  Index element;
  Index inner_inverse;      // a x a = a
  Index reflexive_inverse;  // a y a = a and y a y = y
};

struct ExchangeWitness {
  Index element;
  Index idempotent;  // e in aR, 1 - e in (1 - a)R
};

/// Least inner inverse of every element, kNone where the element is not
/// regular. Memoized per ring.
inline const std::vector<Index>& inner_inverses(const FiniteRing& R) {
  return R.cache().inner_inverses.get([&] {
    std::vector<Index> out(R.order(), kNone);
    for (Index a = 0; a < R.order(); ++a) {
      for (Index x = 0; x < R.order(); ++x) {
        if (R.mul(R.mul(a, x), a) == a) {
          out[a] = x;
          break;
        }
      }
    }
    return out;
  });
}

inline bool is_regular(const FiniteRing& R, Index a) { return inner_inverses(R)[a] != kNone; }

inline std::optional<RegularityWitness> regular_witness(const FiniteRing& R, Index a) {
  const Index x = inner_inverses(R)[a];
  if (x == kNone) return std::nullopt;
  return RegularityWitness{a, x, R.mul3(x, a, x)};
}

/// Two-sided inverses, kNone for non-units. Memoized per ring.
inline const std::vector<Index>& unit_inverses(const FiniteRing& R) {
  return R.cache().unit_inverses.get([&] {
    std::vector<Index> out(R.order(), kNone);
    for (Index a = 0; a < R.order(); ++a) {
      if (out[a] != kNone) continue;
      for (Index x = 0; x < R.order(); ++x) {
        if (R.mul(a, x) == R.one() && R.mul(x, a) == R.one()) {
          out[a] = x;
          out[x] = a;
          break;
        }
      }
    }
    return out;
  });
}

inline std::optional<Index> unit_inverse(const FiniteRing& R, Index a) {
  const Index x = unit_inverses(R)[a];
  if (x == kNone) return std::nullopt;
  return x;
}

inline bool is_unit(const FiniteRing& R, Index a) { return unit_inverses(R)[a] != kNone; }

inline bool is_idempotent(const FiniteRing& R, Index e) { return R.mul(e, e) == e; }

/// All idempotents in index order. Memoized per ring.
inline const std::vector<Index>& idempotents(const FiniteRing& R) {
  return R.cache().idempotents.get([&] {
    std::vector<Index> out;
    for (Index e = 0; e < R.order(); ++e)
      if (is_idempotent(R, e)) out.push_back(e);
    return out;
  });
}

inline ElementSet principal_right_ideal(const FiniteRing& R, Index a) {
  ElementSet out(R.order());
  for (Index r = 0; r < R.order(); ++r) out.insert(R.mul(a, r));
  return out;
}

inline ElementSet principal_left_ideal(const FiniteRing& R, Index a) {
  ElementSet out(R.order());
  for (Index r = 0; r < R.order(); ++r) out.insert(R.mul(r, a));
  return out;
}

inline std::optional<ExchangeWitness> exchange_witness(const FiniteRing& R, Index a) {
  const ElementSet aR = principal_right_ideal(R, a);
  const ElementSet bR = principal_right_ideal(R, R.complement(a));
  for (Index e : idempotents(R))
    if (aR.contains(e) && bR.contains(R.complement(e))) return ExchangeWitness{a, e};
  return std::nullopt;
}

/// {h + k : h in A, k in B}. For additive subgroups this is the subgroup
/// they generate.
inline ElementSet subgroup_sum(const FiniteRing& R, const ElementSet& A, const ElementSet& B) {
  ElementSet out(R.order());
  const auto a_list = A.members();
  const auto b_list = B.members();
  for (Index h : a_list)
    for (Index k : b_list) out.insert(R.add(h, k));
  return out;
}

/// The additive subgroup generated by the given elements.
inline ElementSet additive_closure(const FiniteRing& R, std::span<const Index> generators) {
  ElementSet group(R.order());
  group.insert(R.zero());
  for (Index g : generators) {
    if (group.contains(g)) continue;
    ElementSet cyclic(R.order());
    Index multiple = R.zero();
    do {
      cyclic.insert(multiple);
      multiple = R.add(multiple, g);
    } while (multiple != R.zero());
    group = subgroup_sum(R, group, cyclic);
  }
  return group;
}

inline ElementSet additive_closure(const FiniteRing& R, const ElementSet& generators) {
  const auto list = generators.members();
  return additive_closure(R, std::span<const Index>(list));
}

/// a_1 R + ... + a_n R = R, computed as the additive closure of the union
/// of the principal right ideals.
inline bool is_unimodular_row(const FiniteRing& R, std::span<const Index> row) {
  if (row.empty()) throw InvalidParameter("unimodular row must be nonempty");
  std::vector<Index> generators;
  for (Index a : row)
    for (Index x : principal_right_ideal(R, a).members()) generators.push_back(x);
  return additive_closure(R, std::span<const Index>(generators)).full();
}

inline bool is_unimodular_row(std::span<const RingElement> row) {
  if (row.empty()) throw InvalidParameter("unimodular row must be nonempty");
  std::vector<Index> indices;
  for (const auto& element : row) {
    if (!element.ring.same_ring(row.front().ring))
      throw InvalidParameter("unimodular row mixes elements of " + row.front().ring.label() +
                             " and " + element.ring.label());
    indices.push_back(element.index);
  }
  return is_unimodular_row(row.front().ring, std::span<const Index>(indices));
}

}  // namespace vnl
