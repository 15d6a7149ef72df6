#pragma once

// Ring constructions: Z_n, GF(p^k), direct products, full and upper
// triangular matrix rings, quotients, corners and centers.
//
// Element indexing is the lexicographic order of each construction's tuple
// encoding (first coordinate most significant). Quotient cosets are indexed
// in the order of their least member; corner and center elements in the
// order of their ambient index.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vnl/ideal.hpp"
#include "vnl/ring.hpp"

namespace vnl {

// ---------------------------------------------------------------------------
// Z_n

inline FiniteRing build_cyclic(Index n, const RingConfig& cfg = {}) {
  if (n == 0) throw InvalidParameter("Zn requires n >= 1");
  return FiniteRing::from_operations(
      n, 0, 1 % n, "Zn(" + std::to_string(n) + ")",
      [n](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} + b) % n); },
      [n](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} * b) % n); },
      [n](Index a) { return a == 0 ? 0 : n - a; }, cfg);
}

// ---------------------------------------------------------------------------
// Polynomials over Z_p, coefficient vectors from the constant term upward.

using Poly = std::vector<Index>;

inline bool is_prime(Index p) {
  if (p < 2) return false;
  for (Index d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::string poly_to_string(Poly f) {
  trim(f);
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t d = f.size(); d-- > 0;) {
    const Index c = f[d];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0 || c != 1) out += std::to_string(c);
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

/// Remainder of f modulo a monic g over Z_p.
inline Poly poly_mod(Poly f, const Poly& g, Index p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !f.empty()) {
    const Index lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<Index>((f[shift + i] + (p - lead) * std::uint64_t{g[i]}) % p);
    trim(f);
  }
  return f;
}

/// Least monic factor of degree 1..deg/2, or an empty poly if irreducible.
inline Poly find_factor(const Poly& f, Index p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::size_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Index>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return g;
    }
  }
  return {};
}

/// The monic irreducible of degree k whose lower coefficients, read as a
/// base-p number with the x^(k-1) coefficient most significant, are least.
inline Poly default_modulus(Index p, Index k) {
  if (!is_prime(p)) throw InvalidParameter("GF requires prime p, got " + std::to_string(p));
  if (k == 0) throw InvalidParameter("GF requires k >= 1");
  std::size_t count = 1;
  for (Index i = 0; i < k; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::size_t rest = code;
    for (Index i = 0; i < k; ++i) {
      f[i] = static_cast<Index>(rest % p);
      rest /= p;
    }
    if (find_factor(f, p).empty() && (k == 1 || f[0] != 0)) return f;
  }
  throw InvalidParameter("no irreducible polynomial found");
}

/// GF(p^k) as Z_p[x]/(modulus). Element index = sum c_i p^i.
inline FiniteRing build_field(Index p, Index k, Poly modulus, const RingConfig& cfg = {}) {
  if (!is_prime(p)) throw InvalidParameter("GF requires prime p, got " + std::to_string(p));
  if (k == 0) throw InvalidParameter("GF requires k >= 1");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() != k + 1)
    throw InvalidParameter("modulus " + poly_to_string(modulus) + " does not have degree " +
                           std::to_string(k));
  if (modulus.back() != 1)
    throw InvalidParameter("modulus " + poly_to_string(modulus) + " is not monic");
  if (auto factor = find_factor(modulus, p); !factor.empty())
    throw InvalidParameter("modulus " + poly_to_string(modulus) + " is reducible over Z_" +
                           std::to_string(p) + ": factor " + poly_to_string(factor));
  std::vector<Index> radices(k, p);
  const std::size_t order = checked_product(radices, cfg.max_order, "GF order");

  auto to_poly = [p, k](Index a) {
    Poly f(k);
    for (Index i = 0; i < k; ++i) {
      f[i] = a % p;
      a /= p;
    }
    return f;
  };
  auto from_poly = [p](const Poly& f) {
    Index a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * p + f[i];
    return a;
  };
  std::string label = modulus == default_modulus(p, k)
                          ? (k == 1 ? "GF(" + std::to_string(p) + ")"
                                    : "GF(" + std::to_string(p) + "," + std::to_string(k) + ")")
                          : "GF(" + std::to_string(p) + "," + std::to_string(k) + "," +
                                poly_to_string(modulus) + ")";
  return FiniteRing::from_operations(
      static_cast<Index>(order), 0, 1, std::move(label),
      [=](Index a, Index b) {
        Poly f = to_poly(a), g = to_poly(b);
        for (Index i = 0; i < k; ++i) f[i] = (f[i] + g[i]) % p;
        return from_poly(f);
      },
      [=](Index a, Index b) {
        Poly f = to_poly(a), g = to_poly(b);
        Poly prod(2 * k, 0);
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j)
            prod[i + j] = static_cast<Index>((prod[i + j] + std::uint64_t{f[i]} * g[j]) % p);
        return from_poly(poly_mod(prod, modulus, p));
      },
      [=](Index a) {
        Poly f = to_poly(a);
        for (auto& c : f) c = (p - c) % p;
        return from_poly(f);
      },
      cfg);
}

// ---------------------------------------------------------------------------
// Direct products

struct ProductRing {
  FiniteRing ring;
  std::vector<FiniteRing> factors;

  std::vector<Index> radices() const {
    std::vector<Index> r;
    for (const auto& f : factors) r.push_back(f.order());
    return r;
  }
  std::vector<Index> coordinates(Index a) const { return decode_digits(a, radices()); }
  Index element(const std::vector<Index>& coords) const { return encode_digits(coords, radices()); }
  /// Ring homomorphism onto factor i.
  Index project(std::size_t i, Index a) const { return coordinates(a)[i]; }
  /// Additive injection of factor i (zero in every other coordinate).
  Index embed(std::size_t i, Index r) const {
    std::vector<Index> coords;
    for (const auto& f : factors) coords.push_back(f.zero());
    coords[i] = r;
    return element(coords);
  }
};

inline ProductRing build_product(std::vector<FiniteRing> factors, const RingConfig& cfg = {}) {
  if (factors.empty()) throw InvalidParameter("product needs at least one factor");
  if (factors.size() == 1) return ProductRing{factors.front(), factors};
  std::vector<Index> radices;
  std::string label = "Prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    radices.push_back(factors[i].order());
    label += (i ? "," : "") + factors[i].label();
  }
  label += ")";
  const auto order = checked_product(radices, cfg.max_order, "product " + label);
  auto fs = std::make_shared<std::vector<FiniteRing>>(factors);
  auto componentwise = [fs, radices](auto op) {
    return [fs, radices, op](Index a, Index b) {
      auto x = decode_digits(a, radices), y = decode_digits(b, radices);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = op((*fs)[i], x[i], y[i]);
      return encode_digits(x, radices);
    };
  };
  std::vector<Index> zeros, ones;
  for (const auto& f : factors) {
    zeros.push_back(f.zero());
    ones.push_back(f.one());
  }
  auto ring = FiniteRing::from_operations(
      static_cast<Index>(order), encode_digits(zeros, radices), encode_digits(ones, radices), label,
      componentwise([](const FiniteRing& f, Index a, Index b) { return f.add(a, b); }),
      componentwise([](const FiniteRing& f, Index a, Index b) { return f.mul(a, b); }),
      [fs, radices](Index a) {
        auto x = decode_digits(a, radices);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (*fs)[i].neg(x[i]);
        return encode_digits(x, radices);
      },
      cfg);
  return ProductRing{std::move(ring), std::move(factors)};
}

// ---------------------------------------------------------------------------
// Matrix rings

/// Shape of an n x n matrix encoding: the stored positions in row-major
/// order, each holding a base-ring element index.
struct MatrixShape {
  Index n = 1;
  bool upper = false;
  Index q = 1;  // base order
  std::vector<std::pair<Index, Index>> positions;

  MatrixShape(Index n_, bool upper_, Index q_) : n(n_), upper(upper_), q(q_) {
    for (Index i = 0; i < n; ++i)
      for (Index j = upper ? i : 0; j < n; ++j) positions.emplace_back(i, j);
  }

  std::vector<Index> radices() const { return std::vector<Index>(positions.size(), q); }

  /// Full row-major n*n entry vector; entries outside the shape are zero.
  std::vector<Index> entries(Index a, Index zero) const {
    std::vector<Index> full(static_cast<std::size_t>(n) * n, zero);
    const auto digits = decode_digits(a, radices());
    for (std::size_t k = 0; k < positions.size(); ++k)
      full[positions[k].first * n + positions[k].second] = digits[k];
    return full;
  }

  Index element(const std::vector<Index>& full) const {
    std::vector<Index> digits(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k)
      digits[k] = full[positions[k].first * n + positions[k].second];
    return encode_digits(digits, radices());
  }
};

struct MatrixRing {
  FiniteRing ring;
  FiniteRing base;
  MatrixShape shape;

  Index size() const { return shape.n; }
  bool upper_triangular() const { return shape.upper; }
  std::vector<Index> entries(Index a) const { return shape.entries(a, base.zero()); }
  Index element(const std::vector<Index>& full) const { return shape.element(full); }
  Index entry(Index a, Index i, Index j) const { return entries(a)[i * shape.n + j]; }
  /// E_ij with the base ring's identity at (i, j), zero-based.
  Index unit(Index i, Index j) const {
    std::vector<Index> full(static_cast<std::size_t>(shape.n) * shape.n, base.zero());
    full[i * shape.n + j] = base.one();
    return element(full);
  }
};

namespace detail {

inline MatrixRing build_matrix_like(Index n, const FiniteRing& base, bool upper,
                                    const RingConfig& cfg) {
  if (n == 0) throw InvalidParameter("matrix size must be >= 1");
  MatrixShape shape(n, upper, base.order());
  const std::string label =
      std::string(upper ? "T(" : "M(") + std::to_string(n) + "," + base.label() + ")";
  const auto order = checked_product(shape.radices(), cfg.max_order, label);
  auto entries = [shape, base](Index a) { return shape.entries(a, base.zero()); };
  auto add = [shape, base, entries](Index a, Index b) {
    auto x = entries(a);
    const auto y = entries(b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = base.add(x[k], y[k]);
    return shape.element(x);
  };
  auto mul = [shape, base, entries](Index a, Index b) {
    const auto x = entries(a), y = entries(b);
    const Index m = shape.n;
    std::vector<Index> z(x.size(), base.zero());
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) {
        Index acc = base.zero();
        for (Index k = 0; k < m; ++k) acc = base.add(acc, base.mul(x[i * m + k], y[k * m + j]));
        z[i * m + j] = acc;
      }
    return shape.element(z);
  };
  auto neg = [shape, base, entries](Index a) {
    auto x = entries(a);
    for (auto& v : x) v = base.neg(v);
    return shape.element(x);
  };
  std::vector<Index> identity(static_cast<std::size_t>(n) * n, base.zero());
  for (Index i = 0; i < n; ++i) identity[i * n + i] = base.one();
  std::vector<Index> zero(static_cast<std::size_t>(n) * n, base.zero());
  auto ring = FiniteRing::from_operations(static_cast<Index>(order), shape.element(zero),
                                          shape.element(identity), label, add, mul, neg, cfg);
  return MatrixRing{std::move(ring), base, std::move(shape)};
}

}  // namespace detail

inline MatrixRing build_matrix_ring(Index n, const FiniteRing& base, const RingConfig& cfg = {}) {
  return detail::build_matrix_like(n, base, false, cfg);
}

inline MatrixRing build_upper_triangular(Index n, const FiniteRing& base,
                                         const RingConfig& cfg = {}) {
  return detail::build_matrix_like(n, base, true, cfg);
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientRing {
  FiniteRing ring;
  FiniteRing base;
  std::vector<Index> class_of;        // base element -> coset index
  std::vector<Index> representative;  // coset index -> least member

  Index map(Index a) const { return class_of[a]; }
  Index lift(Index q) const { return representative[q]; }
};

inline QuotientRing build_quotient(const FiniteRing& base, const SubsetIdeal& ideal,
                                   const RingConfig& cfg = {}) {
  if (!ideal.ring().same_ring(base)) throw InvalidParameter("ideal belongs to a different ring");
  if (ideal.side() != Sidedness::TwoSided)
    throw InvalidParameter("quotient requires a two-sided ideal, got " +
                           std::string(to_string(ideal.side())));
  const auto members = ideal.members().members();
  std::vector<Index> rep_of(base.order(), kNone);
  std::vector<Index> reps;
  for (Index a = 0; a < base.order(); ++a) {
    if (rep_of[a] != kNone) continue;
    // a is the least member of its coset since all smaller ones are labelled
    reps.push_back(a);
    for (Index i : members) rep_of[base.add(a, i)] = a;
  }
  std::vector<Index> position(base.order(), kNone);
  for (Index q = 0; q < reps.size(); ++q) position[reps[q]] = q;
  std::vector<Index> class_of(base.order());
  for (Index a = 0; a < base.order(); ++a) class_of[a] = position[rep_of[a]];

  auto cls = std::make_shared<std::vector<Index>>(class_of);
  auto rp = std::make_shared<std::vector<Index>>(reps);
  auto ring = FiniteRing::from_operations(
      static_cast<Index>(reps.size()), (*cls)[base.zero()], (*cls)[base.one()],
      "Quot(" + base.label() + "," + ideal.label() + ")",
      [base, cls, rp](Index x, Index y) { return (*cls)[base.add((*rp)[x], (*rp)[y])]; },
      [base, cls, rp](Index x, Index y) { return (*cls)[base.mul((*rp)[x], (*rp)[y])]; },
      [base, cls, rp](Index x) { return (*cls)[base.neg((*rp)[x])]; }, cfg);
  return QuotientRing{std::move(ring), base, std::move(class_of), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Subrings sharing the ambient operations: corners eRe and the center.

struct Subring {
  FiniteRing ring;
  FiniteRing base;
  std::vector<Index> members;   // sub index -> base element
  std::vector<Index> position;  // base element -> sub index, kNone outside

  Index include(Index x) const { return members[x]; }
  Index restrict(Index a) const { return position[a]; }
  bool contains(Index a) const { return position[a] != kNone; }
};

namespace detail {

inline Subring build_subring(const FiniteRing& base, const ElementSet& set, Index identity,
                             std::string label, const RingConfig& cfg) {
  auto members = std::make_shared<std::vector<Index>>(set.members());
  auto position = std::make_shared<std::vector<Index>>(base.order(), kNone);
  for (Index i = 0; i < members->size(); ++i) (*position)[(*members)[i]] = i;
  auto lookup = [base, position](Index a, const char* what) {
    const Index p = (*position)[a];
    if (p == kNone)
      throw InternalInconsistency(std::string("subring of ") + base.label() + " not closed under " +
                                  what);
    return p;
  };
  auto ring = FiniteRing::from_operations(
      static_cast<Index>(members->size()), (*position)[base.zero()], (*position)[identity],
      std::move(label),
      [base, members, lookup](Index x, Index y) {
        return lookup(base.add((*members)[x], (*members)[y]), "addition");
      },
      [base, members, lookup](Index x, Index y) {
        return lookup(base.mul((*members)[x], (*members)[y]), "multiplication");
      },
      [base, members, lookup](Index x) { return lookup(base.neg((*members)[x]), "negation"); },
      cfg);
  return Subring{std::move(ring), base, *members, *position};
}

}  // namespace detail

/// eRe as a set of ambient elements.
inline ElementSet corner_set(const FiniteRing& R, Index e) {
  ElementSet out(R.order());
  for (Index r = 0; r < R.order(); ++r) out.insert(R.mul3(e, r, e));
  return out;
}

/// e R f as a set of ambient elements.
inline ElementSet peirce_set(const FiniteRing& R, Index e, Index f) {
  ElementSet out(R.order());
  for (Index r = 0; r < R.order(); ++r) out.insert(R.mul3(e, r, f));
  return out;
}

inline Subring build_corner(const FiniteRing& base, Index e, const RingConfig& cfg = {}) {
  if (e >= base.order()) throw InvalidParameter("corner idempotent index out of range");
  if (base.mul(e, e) != e)
    throw InvalidParameter("element " + std::to_string(e) + " of " + base.label() +
                           " is not idempotent");
  return detail::build_subring(base, corner_set(base, e), e,
                               "Corner(" + base.label() + "," + std::to_string(e) + ")", cfg);
}

inline ElementSet center_set(const FiniteRing& R) {
  ElementSet out(R.order());
  for (Index z = 0; z < R.order(); ++z) {
    bool central = true;
    for (Index r = 0; r < R.order() && central; ++r) central = R.mul(z, r) == R.mul(r, z);
    if (central) out.insert(z);
  }
  return out;
}

inline Subring center(const FiniteRing& base, const RingConfig& cfg = {}) {
  return detail::build_subring(base, center_set(base), base.one(),
                               "Center(" + base.label() + ")", cfg);
}

}  // namespace vnl
