#pragma once

// Bimodules and formal triangular matrix rings [[R, M], [0, S]], with the
// regularity and VNL criteria for them.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnl/constructions.hpp"
#include "vnl/elements.hpp"
#include "vnl/properties.hpp"
#include "vnl/structure.hpp"

namespace vnl {

/// An (R, S)-bimodule on {0..order-1}, stored as addition and action
/// tables. Every axiom is checked exhaustively on construction.
class Bimodule {
 public:
  /// add: order x order, left: |R| x order, right: order x |S|, row-major.
  static Bimodule from_tables(FiniteRing R, FiniteRing S, Index order, std::vector<Index> add,
                              std::vector<Index> left, std::vector<Index> right,
                              std::string label) {
    Bimodule M(std::move(R), std::move(S), order, std::move(add), std::move(left),
               std::move(right), std::move(label));
    if (auto failure = M.axiom_violation(); !failure.empty())
      throw InvalidParameter("bimodule " + M.label_ + " over (" + M.left_ring_.label() + ", " +
                             M.right_ring_.label() + "): " + failure);
    return M;
  }

  Index order() const { return order_; }
  Index zero() const { return zero_; }
  Index add(Index m, Index n) const { return add_[static_cast<std::size_t>(m) * order_ + n]; }
  Index neg(Index m) const { return neg_[m]; }
  Index sub(Index m, Index n) const { return add(m, neg(n)); }
  Index left(Index r, Index m) const { return left_[static_cast<std::size_t>(r) * order_ + m]; }
  Index right(Index m, Index s) const {
    return right_[static_cast<std::size_t>(m) * right_ring_.order() + s];
  }
  const FiniteRing& left_ring() const { return left_ring_; }
  const FiniteRing& right_ring() const { return right_ring_; }
  const std::string& label() const { return label_; }

  bool left_annihilates(Index r) const {
    for (Index m = 0; m < order_; ++m)
      if (left(r, m) != zero_) return false;
    return true;
  }
  bool right_annihilates(Index s) const {
    for (Index m = 0; m < order_; ++m)
      if (right(m, s) != zero_) return false;
    return true;
  }
  /// rM = M
  bool left_surjective(Index r) const {
    ElementSet image(order_);
    for (Index m = 0; m < order_; ++m) image.insert(left(r, m));
    return image.full();
  }
  /// Ms = M
  bool right_surjective(Index s) const {
    ElementSet image(order_);
    for (Index m = 0; m < order_; ++m) image.insert(right(m, s));
    return image.full();
  }

 private:
  Bimodule(FiniteRing R, FiniteRing S, Index order, std::vector<Index> add,
           std::vector<Index> left, std::vector<Index> right, std::string label)
      : left_ring_(std::move(R)), right_ring_(std::move(S)), order_(order), add_(std::move(add)),
        left_(std::move(left)), right_(std::move(right)), label_(std::move(label)) {}

  std::string axiom_violation() {
    const FiniteRing& R = left_ring_;
    const FiniteRing& S = right_ring_;
    const Index g = order_;
    if (g == 0) return "group order must be positive";
    if (add_.size() != static_cast<std::size_t>(g) * g) return "add table has wrong size";
    if (left_.size() != static_cast<std::size_t>(R.order()) * g) return "left action table has wrong size";
    if (right_.size() != static_cast<std::size_t>(g) * S.order()) return "right action table has wrong size";
    for (Index v : add_) if (v >= g) return "add table entry out of range";
    for (Index v : left_) if (v >= g) return "left action entry out of range";
    for (Index v : right_) if (v >= g) return "right action entry out of range";
    auto at = [](const char* what, std::initializer_list<Index> xs) {
      std::string s = std::string(what) + " fails at (";
      bool first = true;
      for (Index x : xs) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      return s + ")";
    };
    zero_ = kNone;
    for (Index z = 0; z < g && zero_ == kNone; ++z) {
      bool identity = true;
      for (Index m = 0; m < g && identity; ++m) identity = add(z, m) == m && add(m, z) == m;
      if (identity) zero_ = z;
    }
    if (zero_ == kNone) return "addition has no identity";
    neg_.assign(g, kNone);
    for (Index m = 0; m < g; ++m)
      for (Index n = 0; n < g; ++n)
        if (add(m, n) == zero_) {
          neg_[m] = n;
          break;
        }
    for (Index m = 0; m < g; ++m) {
      if (neg_[m] == kNone) return at("additive inverse", {m});
      for (Index n = 0; n < g; ++n) {
        if (add(m, n) != add(n, m)) return at("additive commutativity", {m, n});
        for (Index k = 0; k < g; ++k)
          if (add(add(m, n), k) != add(m, add(n, k))) return at("additive associativity", {m, n, k});
      }
    }
    for (Index m = 0; m < g; ++m) {
      if (left(R.one(), m) != m) return at("1*m = m", {m});
      if (right(m, S.one()) != m) return at("m*1 = m", {m});
    }
    for (Index r = 0; r < R.order(); ++r)
      for (Index m = 0; m < g; ++m) {
        for (Index n = 0; n < g; ++n)
          if (left(r, add(m, n)) != add(left(r, m), left(r, n))) return at("r(m+n) = rm+rn", {r, m, n});
        for (Index r2 = 0; r2 < R.order(); ++r2) {
          if (left(R.add(r, r2), m) != add(left(r, m), left(r2, m))) return at("(r+r')m = rm+r'm", {r, r2, m});
          if (left(R.mul(r, r2), m) != left(r, left(r2, m))) return at("(rr')m = r(r'm)", {r, r2, m});
        }
        for (Index s = 0; s < S.order(); ++s)
          if (right(left(r, m), s) != left(r, right(m, s))) return at("(rm)s = r(ms)", {r, m, s});
      }
    for (Index s = 0; s < S.order(); ++s)
      for (Index m = 0; m < g; ++m) {
        for (Index n = 0; n < g; ++n)
          if (right(add(m, n), s) != add(right(m, s), right(n, s))) return at("(m+n)s = ms+ns", {m, n, s});
        for (Index s2 = 0; s2 < S.order(); ++s2) {
          if (right(m, S.add(s, s2)) != add(right(m, s), right(m, s2))) return at("m(s+s') = ms+ms'", {m, s, s2});
          if (right(m, S.mul(s, s2)) != right(right(m, s), s2)) return at("m(ss') = (ms)s'", {m, s, s2});
        }
      }
    return {};
  }

  FiniteRing left_ring_;
  FiniteRing right_ring_;
  Index order_;
  Index zero_ = 0;
  std::vector<Index> add_;
  std::vector<Index> neg_;
  std::vector<Index> left_;
  std::vector<Index> right_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Standard bimodules

/// R as an (R, R)-bimodule.
inline Bimodule ring_bimodule(const FiniteRing& R, std::string label = "self") {
  const Index n = R.order();
  std::vector<Index> add(static_cast<std::size_t>(n) * n), act(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      add[a * n + b] = R.add(a, b);
      act[a * n + b] = R.mul(a, b);
    }
  return Bimodule::from_tables(R, R, n, add, act, act, std::move(label));
}

/// A two-sided ideal as an (R, R)-bimodule; module elements are indexed in
/// the order of their ring index.
inline Bimodule ideal_bimodule(const SubsetIdeal& I, std::string label) {
  if (I.side() != Sidedness::TwoSided) throw InvalidParameter("ideal bimodule needs a two-sided ideal");
  const FiniteRing& R = I.ring();
  const auto members = I.members().members();
  const Index g = static_cast<Index>(members.size());
  std::vector<Index> pos(R.order(), kNone);
  for (Index i = 0; i < g; ++i) pos[members[i]] = i;
  std::vector<Index> add(static_cast<std::size_t>(g) * g);
  std::vector<Index> left(static_cast<std::size_t>(R.order()) * g);
  std::vector<Index> right(static_cast<std::size_t>(g) * R.order());
  for (Index i = 0; i < g; ++i) {
    for (Index j = 0; j < g; ++j) add[i * g + j] = pos[R.add(members[i], members[j])];
    for (Index r = 0; r < R.order(); ++r) {
      left[r * g + i] = pos[R.mul(r, members[i])];
      right[i * R.order() + r] = pos[R.mul(members[i], r)];
    }
  }
  return Bimodule::from_tables(R, R, g, add, left, right, std::move(label));
}

inline Bimodule zero_bimodule(const FiniteRing& R, const FiniteRing& S) {
  return Bimodule::from_tables(R, S, 1, {0}, std::vector<Index>(R.order(), 0),
                               std::vector<Index>(S.order(), 0), "zero");
}

namespace detail {

/// base^n column vectors, index = lexicographic digits.
inline Bimodule vector_bimodule(const MatrixRing& A, bool column) {
  const FiniteRing& B = A.base;
  const Index n = A.size();
  const std::vector<Index> radices(n, B.order());
  const std::size_t g = checked_product(radices, std::size_t{1} << 16, "vector module");
  const FiniteRing& R = column ? A.ring : B;
  const FiniteRing& S = column ? B : A.ring;
  std::vector<Index> add(g * g), left(R.order() * g), right(g * S.order());
  for (Index u = 0; u < g; ++u) {
    const auto x = decode_digits(u, radices);
    for (Index v = 0; v < g; ++v) {
      const auto y = decode_digits(v, radices);
      std::vector<Index> z(n);
      for (Index i = 0; i < n; ++i) z[i] = B.add(x[i], y[i]);
      add[u * g + v] = encode_digits(z, radices);
    }
  }
  auto matrix_times_vector = [&](Index a, const std::vector<Index>& v) {
    const auto m = A.entries(a);
    std::vector<Index> out(n, B.zero());
    for (Index i = 0; i < n; ++i)
      for (Index k = 0; k < n; ++k) out[i] = B.add(out[i], B.mul(m[i * n + k], v[k]));
    return out;
  };
  auto vector_times_matrix = [&](const std::vector<Index>& v, Index a) {
    const auto m = A.entries(a);
    std::vector<Index> out(n, B.zero());
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out[j] = B.add(out[j], B.mul(v[k], m[k * n + j]));
    return out;
  };
  for (Index u = 0; u < g; ++u) {
    const auto x = decode_digits(u, radices);
    if (column) {
      for (Index a = 0; a < R.order(); ++a) left[a * g + u] = encode_digits(matrix_times_vector(a, x), radices);
      for (Index s = 0; s < S.order(); ++s) {
        std::vector<Index> z(n);
        for (Index i = 0; i < n; ++i) z[i] = B.mul(x[i], s);
        right[u * S.order() + s] = encode_digits(z, radices);
      }
    } else {
      for (Index r = 0; r < R.order(); ++r) {
        std::vector<Index> z(n);
        for (Index i = 0; i < n; ++i) z[i] = B.mul(r, x[i]);
        left[r * g + u] = encode_digits(z, radices);
      }
      for (Index a = 0; a < S.order(); ++a) right[u * S.order() + a] = encode_digits(vector_times_matrix(x, a), radices);
    }
  }
  return Bimodule::from_tables(R, S, static_cast<Index>(g), add, left, right, column ? "col" : "row");
}

}  // namespace detail

/// base^n as an (A, base)-bimodule where A is M_n(base) or T_n(base).
inline Bimodule column_module(const MatrixRing& A) { return detail::vector_bimodule(A, true); }

/// base^n as a (base, A)-bimodule.
inline Bimodule row_module(const MatrixRing& A) { return detail::vector_bimodule(A, false); }

/// n x n matrices over the common base supported on the last column, as an
/// (A, B)-bimodule under matrix multiplication. For A = M_2(D), B = T_2(D)
/// this is [[0, D], [0, D]].
inline Bimodule last_column_module(const MatrixRing& A, const MatrixRing& B) {
  if (!A.base.same_ring(B.base) || A.size() != B.size())
    throw InvalidParameter("last-column module needs matrix rings of one size over one base");
  const FiniteRing& D = A.base;
  const Index n = A.size();
  const std::vector<Index> radices(n, D.order());
  const std::size_t g = checked_product(radices, std::size_t{1} << 16, "last-column module");
  auto full = [&](Index u) {
    const auto col = decode_digits(u, radices);
    std::vector<Index> m(static_cast<std::size_t>(n) * n, D.zero());
    for (Index i = 0; i < n; ++i) m[i * n + n - 1] = col[i];
    return m;
  };
  auto product = [&](const std::vector<Index>& x, const std::vector<Index>& y) {
    std::vector<Index> z(x.size(), D.zero());
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) z[i * n + j] = D.add(z[i * n + j], D.mul(x[i * n + k], y[k * n + j]));
    return z;
  };
  auto compress = [&](const std::vector<Index>& m) -> Index {
    std::vector<Index> col(n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j + 1 < n; ++j)
        if (m[i * n + j] != D.zero()) throw InternalInconsistency("last-column module not closed");
      col[i] = m[i * n + n - 1];
    }
    return encode_digits(col, radices);
  };
  std::vector<Index> add(g * g), left(A.ring.order() * g), right(g * B.ring.order());
  for (Index u = 0; u < g; ++u) {
    const auto mu = full(u);
    for (Index v = 0; v < g; ++v) {
      auto mv = full(v);
      for (std::size_t k = 0; k < mv.size(); ++k) mv[k] = D.add(mu[k], mv[k]);
      add[u * g + v] = compress(mv);
    }
    for (Index a = 0; a < A.ring.order(); ++a) left[a * g + u] = compress(product(A.entries(a), mu));
    for (Index b = 0; b < B.ring.order(); ++b) right[u * B.ring.order() + b] = compress(product(mu, B.entries(b)));
  }
  return Bimodule::from_tables(A.ring, B.ring, static_cast<Index>(g), add, left, right, "lastcol");
}

/// Z_g as an (R, S)-bimodule through the surjections R -> Z_g, S -> Z_g.
/// Both rings must be additively generated by 1 (Z_n or GF(p)) with g
/// dividing their order.
inline Bimodule cyclic_bimodule(const FiniteRing& R, const FiniteRing& S, Index g) {
  auto reduction = [g](const FiniteRing& A) {
    if (g == 0 || A.order() % g != 0)
      throw InvalidParameter("cyclic module Z_" + std::to_string(g) + " needs g dividing |" + A.label() + "|");
    std::vector<Index> image(A.order(), kNone);
    Index x = A.zero();
    for (Index k = 0; k < A.order(); ++k) {
      image[x] = k % g;
      x = A.add(x, A.one());
    }
    for (Index v : image)
      if (v == kNone) throw InvalidParameter("cyclic module needs " + A.label() + " generated by 1");
    return image;
  };
  const auto phi = reduction(R), psi = reduction(S);
  std::vector<Index> add(static_cast<std::size_t>(g) * g), left(R.order() * g), right(g * S.order());
  for (Index m = 0; m < g; ++m) {
    for (Index n = 0; n < g; ++n) add[m * g + n] = (m + n) % g;
    for (Index r = 0; r < R.order(); ++r) left[r * g + m] = (phi[r] * m) % g;
    for (Index s = 0; s < S.order(); ++s) right[m * S.order() + s] = (m * psi[s]) % g;
  }
  return Bimodule::from_tables(R, S, g, add, left, right, "cyc:" + std::to_string(g));
}

// ---------------------------------------------------------------------------
// Formal triangular rings

struct Triple {
  Index r, m, s;
  friend bool operator==(const Triple&, const Triple&) = default;
};

class TriangularRing {
 public:
  TriangularRing(FiniteRing ring, Bimodule module) : ring_(std::move(ring)), module_(std::move(module)) {}

  const FiniteRing& ring() const { return ring_; }
  const FiniteRing& left_ring() const { return module_.left_ring(); }
  const FiniteRing& right_ring() const { return module_.right_ring(); }
  const Bimodule& module() const { return module_; }

  Triple decode(Index a) const {
    const Index ms = module_.order() * right_ring().order();
    return {a / ms, (a % ms) / right_ring().order(), a % right_ring().order()};
  }
  Index encode(const Triple& t) const {
    return (t.r * module_.order() + t.m) * right_ring().order() + t.s;
  }

 private:
  FiniteRing ring_;
  Bimodule module_;
};

inline TriangularRing build_formal_triangular(const FiniteRing& R, const Bimodule& M,
                                              const FiniteRing& S, const RingConfig& cfg = {}) {
  if (!M.left_ring().same_ring(R) || !M.right_ring().same_ring(S))
    throw InvalidParameter("bimodule " + M.label() + " is over (" + M.left_ring().label() + ", " +
                           M.right_ring().label() + "), not (" + R.label() + ", " + S.label() + ")");
  const std::vector<Index> radices{R.order(), M.order(), S.order()};
  const std::string label = "Tri(" + R.label() + "," + M.label() + "," + S.label() + ")";
  const auto order = checked_product(radices, cfg.max_order, label);
  auto mod = std::make_shared<Bimodule>(M);
  auto split = [radices](Index a) { return decode_digits(a, radices); };
  auto join = [radices](Index r, Index m, Index s) { return encode_digits({r, m, s}, radices); };
  auto ring = FiniteRing::from_operations(
      static_cast<Index>(order), join(R.zero(), M.zero(), S.zero()), join(R.one(), M.zero(), S.one()),
      label,
      [=](Index a, Index b) {
        const auto x = split(a), y = split(b);
        return join(R.add(x[0], y[0]), mod->add(x[1], y[1]), S.add(x[2], y[2]));
      },
      [=](Index a, Index b) {
        const auto x = split(a), y = split(b);
        return join(R.mul(x[0], y[0]), mod->add(mod->left(x[0], y[1]), mod->right(x[1], y[2])),
                    S.mul(x[2], y[2]));
      },
      [=](Index a) {
        const auto x = split(a);
        return join(R.neg(x[0]), mod->neg(x[1]), S.neg(x[2]));
      },
      cfg);
  return TriangularRing(std::move(ring), M);
}

/// T_n(D) presented both as an upper triangular matrix ring and as
/// [[T_{n-1}(D), D^{n-1}], [0, D]], with the index bijection between them.
struct TriangularPresentations {
  MatrixRing upper;
  MatrixRing corner;  // T_{n-1}(D)
  TriangularRing formal;
  std::vector<Index> formal_to_upper;
};

inline TriangularPresentations formal_from_upper_triangular(Index n, const FiniteRing& D,
                                                            const RingConfig& cfg = {}) {
  if (n < 2) throw InvalidParameter("formal presentation needs n >= 2");
  auto upper = build_upper_triangular(n, D, cfg);
  auto corner = build_upper_triangular(n - 1, D, cfg);
  auto col = column_module(corner);
  auto formal = build_formal_triangular(corner.ring, col, D, cfg);
  const std::vector<Index> radices(n - 1, D.order());
  std::vector<Index> bijection(formal.ring().order());
  for (Index a = 0; a < formal.ring().order(); ++a) {
    const Triple t = formal.decode(a);
    const auto block = corner.entries(t.r);
    const auto column = decode_digits(t.m, radices);
    std::vector<Index> full(static_cast<std::size_t>(n) * n, D.zero());
    for (Index i = 0; i + 1 < n; ++i) {
      for (Index j = 0; j + 1 < n; ++j) full[i * n + j] = block[i * (n - 1) + j];
      full[i * n + n - 1] = column[i];
    }
    full[(n - 1) * n + n - 1] = t.s;
    bijection[a] = upper.element(full);
  }
  return {std::move(upper), std::move(corner), std::move(formal), std::move(bijection)};
}

// ---------------------------------------------------------------------------
// Criteria

/// Scans idempotents of the acting ring for e with eM != 0 and (1-e)M != 0.
inline PropertyReport is_partial_module(const Bimodule& M, Sidedness side) {
  if (side == Sidedness::TwoSided) throw InvalidParameter("partiality is one-sided");
  const bool left = side == Sidedness::Left;
  const FiniteRing& A = left ? M.left_ring() : M.right_ring();
  const std::string name = left ? "left-partial" : "right-partial";
  for (Index e : idempotents(A)) {
    const Index f = A.complement(e);
    const bool e_kills = left ? M.left_annihilates(e) : M.right_annihilates(e);
    const bool f_kills = left ? M.left_annihilates(f) : M.right_annihilates(f);
    if (!e_kills && !f_kills) return fail(name, {e}, "eM != 0 and (1-e)M != 0");
  }
  return {name, true, std::nullopt, "brute-force"};
}

/// Idempotents e with rR = eR, seeded with the products r*x in x order.
inline std::vector<Index> right_generators(const FiniteRing& R, Index r) {
  std::vector<Index> out;
  ElementSet seen(R.order());
  for (Index x = 0; x < R.order(); ++x) {
    const Index e = R.mul(r, x);
    if (seen.contains(e)) continue;
    seen.insert(e);
    if (is_idempotent(R, e) && R.mul(e, r) == r) out.push_back(e);
  }
  return out;
}

/// Idempotents f with Ss = Sf, seeded with the products z*s in z order.
inline std::vector<Index> left_generators(const FiniteRing& S, Index s) {
  std::vector<Index> out;
  ElementSet seen(S.order());
  for (Index z = 0; z < S.order(); ++z) {
    const Index f = S.mul(z, s);
    if (seen.contains(f)) continue;
    seen.insert(f);
    if (is_idempotent(S, f) && S.mul(s, f) == s) out.push_back(f);
  }
  return out;
}

/// Regularity of (r, m, s) via idempotents e in R, f in S with rR = eR,
/// Ss = Sf and (1-e)m(1-f) = 0. On success returns the inner inverse
/// (x, -x m z, z) with r x = e and z s = f.
inline std::optional<RegularityWitness> regular_via_prop28(const TriangularRing& T, const Triple& a) {
  const FiniteRing& R = T.left_ring();
  const FiniteRing& S = T.right_ring();
  const Bimodule& M = T.module();
  for (Index e : right_generators(R, a.r)) {
    for (Index f : left_generators(S, a.s)) {
      if (M.right(M.left(R.complement(e), a.m), S.complement(f)) != M.zero()) continue;
      Index x = kNone, z = kNone;
      for (Index c = 0; c < R.order() && x == kNone; ++c)
        if (R.mul(a.r, c) == e) x = c;
      for (Index c = 0; c < S.order() && z == kNone; ++c)
        if (S.mul(c, a.s) == f) z = c;
      const Triple inverse{x, M.neg(M.left(x, M.right(a.m, z))), z};
      const Index ai = T.encode(a), xi = T.encode(inverse);
      const FiniteRing& ring = T.ring();
      if (ring.mul3(ai, xi, ai) != ai)
        throw InternalInconsistency("constructed inner inverse fails for " + std::to_string(ai) +
                                    " in " + ring.label());
      return RegularityWitness{ai, xi, ring.mul3(xi, ai, xi)};
    }
  }
  return std::nullopt;
}

struct Thm212Conditions {
  bool one_regular_other_vnl = false;
  bool some_side_partial = false;
  bool surjectivity = false;
  PropertyReport report;
};

/// Evaluates all three conditions: (1) one of R, S regular and the other
/// VNL; (2) _R M or M_S partial; (3) (1-r)M = M for non-regular r in R and
/// M(1-s) = M for non-regular s in S. The report's witness names the first
/// failing condition.
inline Thm212Conditions thm212_conditions(const Bimodule& M) {
  const FiniteRing& R = M.left_ring();
  const FiniteRing& S = M.right_ring();
  Thm212Conditions c;
  std::optional<Witness> first;

  const bool r_regular = ring_is_regular(R), s_regular = ring_is_regular(S);
  const auto r_vnl = is_vnl(R), s_vnl = is_vnl(S);
  c.one_regular_other_vnl = (r_regular && s_vnl.holds) || (s_regular && r_vnl.holds);
  if (!c.one_regular_other_vnl) {
    if (!r_regular && !s_regular) {
      Index r = 0, s = 0;
      while (is_regular(R, r)) ++r;
      while (is_regular(S, s)) ++s;
      first = Witness{{r, s}, "condition (1): non-regular r in R and s in S"};
    } else if (!r_vnl.holds) {
      first = Witness{r_vnl.witness->elements, "condition (1): R is not VNL"};
    } else {
      first = Witness{s_vnl.witness->elements, "condition (1): S is not VNL"};
    }
  }

  const auto left = is_partial_module(M, Sidedness::Left);
  const auto right = is_partial_module(M, Sidedness::Right);
  c.some_side_partial = left.holds || right.holds;
  if (!c.some_side_partial && !first)
    first = Witness{{left.witness->elements.front(), right.witness->elements.front()},
                    "condition (2): neither _R M nor M_S is partial"};

  c.surjectivity = true;
  for (Index r = 0; r < R.order() && c.surjectivity; ++r)
    if (!is_regular(R, r) && !M.left_surjective(R.complement(r))) {
      c.surjectivity = false;
      if (!first) first = Witness{{r}, "condition (3): (1-r)M != M for non-regular r in R"};
    }
  for (Index s = 0; s < S.order() && c.surjectivity; ++s)
    if (!is_regular(S, s) && !M.right_surjective(S.complement(s))) {
      c.surjectivity = false;
      if (!first) first = Witness{{s}, "condition (3): M(1-s) != M for non-regular s in S"};
    }

  c.report.property = "vnl";
  c.report.method = "triangular-criterion";
  c.report.holds = c.one_regular_other_vnl && c.some_side_partial && c.surjectivity;
  if (!c.report.holds) c.report.witness = first;
  return c;
}

inline PropertyReport vnl_via_thm212(const FiniteRing& R, const Bimodule& M, const FiniteRing& S) {
  if (!M.left_ring().same_ring(R) || !M.right_ring().same_ring(S))
    throw InvalidParameter("bimodule does not match the given rings");
  return thm212_conditions(M).report;
}

/// For (r, m, l) with r regular (least inner inverse s) and l a unit of S,
/// the inner inverse (s, -s m l^-1, l^-1). Absent when l is not a unit.
inline std::optional<RegularityWitness> witness_unit_corner(const TriangularRing& T, const Triple& a) {
  const FiniteRing& R = T.left_ring();
  const FiniteRing& S = T.right_ring();
  const Bimodule& M = T.module();
  const auto s = regular_witness(R, a.r);
  const auto l_inv = unit_inverse(S, a.s);
  if (!s || !l_inv) return std::nullopt;
  const Index x = s->inner_inverse;
  const Triple inverse{x, M.neg(M.left(x, M.right(a.m, *l_inv))), *l_inv};
  const Index ai = T.encode(a), xi = T.encode(inverse);
  return RegularityWitness{ai, xi, T.ring().mul3(xi, ai, xi)};
}

/// Inverse of x inside the corner eRe, if x is a unit there.
inline std::optional<Index> corner_inverse(const FiniteRing& R, Index e, Index x) {
  for (Index y : corner_set(R, e).members())
    if (R.mul(x, y) == e && R.mul(y, x) == e) return y;
  return std::nullopt;
}

/// For c = [[u, x], [y, d]] in the Peirce split by eT + eD = 1 with u a
/// unit of eT R eT and d a unit of eD R eD, evaluates the block formula
/// [[W^-1, -u^-1 x d^-1], [-d^-1 y W^-1, d^-1]] with W = u - x d^-1 y.
/// The formula is the inverse of c when YX = 0; the caller verifies it.
inline std::optional<Index> peirce_block_inverse(const FiniteRing& R, Index eT, Index eD, Index c) {
  const Index u = R.mul3(eT, c, eT), x = R.mul3(eT, c, eD);
  const Index y = R.mul3(eD, c, eT), d = R.mul3(eD, c, eD);
  const auto u_inv = corner_inverse(R, eT, u);
  const auto d_inv = corner_inverse(R, eD, d);
  if (!u_inv || !d_inv) return std::nullopt;
  const Index w = R.sub(u, R.mul3(x, *d_inv, y));
  const auto w_inv = corner_inverse(R, eT, w);
  if (!w_inv) return std::nullopt;
  const Index top_right = R.neg(R.mul3(*u_inv, x, *d_inv));
  const Index bottom_left = R.neg(R.mul3(*d_inv, y, *w_inv));
  return R.add(R.add(*w_inv, top_right), R.add(bottom_left, *d_inv));
}

}  // namespace vnl
