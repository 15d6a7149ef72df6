#pragma once

// Finite unital rings over element indices {0..order-1}.
//
// A ring is either a dense pair of Cayley tables or a "structured" ring
// whose addition and multiplication are computed on demand from the
// construction (matrix entries, product coordinates, ...). Every analysis
// in this library goes through add/neg/mul only, so the two
// representations are interchangeable.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vnl/element_set.hpp"
#include "vnl/error.hpp"

namespace vnl {

enum class ReprKind { DenseTable, Structured };

inline const char* to_string(ReprKind kind) {
  return kind == ReprKind::DenseTable ? "dense-table" : "structured";
}

struct RingConfig {
  /// Rings up to this order get materialized Cayley tables.
  std::size_t dense_cap = 4096;
  /// Hard ceiling on any ring order, dense or structured.
  std::size_t max_order = std::size_t{1} << 20;
  /// Random triples checked when exhaustive validation is too expensive.
  std::size_t sample_budget = 100000;
  /// Dense rings with order^3 at most this are validated on every triple.
  std::size_t exhaustive_triple_budget = std::size_t{1} << 22;
  std::uint64_t seed = 0;
  bool validate = true;
};

using BinaryOp = std::function<Index(Index, Index)>;
using UnaryOp = std::function<Index(Index)>;

namespace detail {

template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& compute) const {
    std::call_once(flag_, [&] { value_ = compute(); });
    return value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable T value_{};
};

struct RingData {
  Index order = 1;
  Index zero = 0;
  Index one = 0;
  std::string label;
  ReprKind kind = ReprKind::DenseTable;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<Index> neg_table;
  BinaryOp add_fn;
  BinaryOp mul_fn;

  // Per-ring memoized invariants. Population is idempotent, so concurrent
  // readers at worst block on the once_flag.
  Lazy<std::vector<Index>> inner_inverses;
  Lazy<std::vector<Index>> unit_inverses;
  Lazy<std::vector<Index>> idempotents;
  Lazy<std::vector<std::uint8_t>> radical;
};

}  // namespace detail

class FiniteRing {
 public:
  /// Builds a ring from total operations on {0..order-1}. Tables are
  /// materialized when order <= cfg.dense_cap; otherwise the operations are
  /// kept and evaluated lazily. Validates the ring axioms when cfg.validate.
  static FiniteRing from_operations(Index order, Index zero, Index one, std::string label,
                                    BinaryOp add, BinaryOp mul, UnaryOp neg,
                                    const RingConfig& cfg);

  Index order() const { return data_->order; }
  Index zero() const { return data_->zero; }
  Index one() const { return data_->one; }
  const std::string& label() const { return data_->label; }
  ReprKind repr_kind() const { return data_->kind; }
  bool is_zero_ring() const { return data_->order == 1; }

  Index add(Index a, Index b) const {
    if (!data_->add_table.empty())
      return data_->add_table[static_cast<std::size_t>(a) * data_->order + b];
    return data_->add_fn(a, b);
  }
  Index mul(Index a, Index b) const {
    if (!data_->mul_table.empty())
      return data_->mul_table[static_cast<std::size_t>(a) * data_->order + b];
    return data_->mul_fn(a, b);
  }
  Index neg(Index a) const { return data_->neg_table[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index mul3(Index a, Index b, Index c) const { return mul(mul(a, b), c); }
  /// 1 - a
  Index complement(Index a) const { return sub(one(), a); }

  bool same_ring(const FiniteRing& other) const { return data_ == other.data_; }

  const detail::RingData& cache() const { return *data_; }

 private:
  explicit FiniteRing(std::shared_ptr<detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::RingData> data_;
};

/// A ring element tied to its ring; used where inputs may come from
/// different rings and must be checked.
struct RingElement {
  FiniteRing ring;
  Index index;
};

/// Describes the first axiom violation found, or returns an empty string.
inline std::string find_axiom_violation(const FiniteRing& R, const RingConfig& cfg) {
  const Index n = R.order();
  const Index z = R.zero();
  const Index one = R.one();
  if (n > 1 && z == one) return "zero equals one in a ring of order " + std::to_string(n);
  for (Index a = 0; a < n; ++a) {
    if (R.add(a, z) != a || R.add(z, a) != a) return "zero is not additive identity at " + std::to_string(a);
    if (R.add(a, R.neg(a)) != z) return "neg is not additive inverse at " + std::to_string(a);
    if (R.mul(one, a) != a || R.mul(a, one) != a) return "one is not multiplicative identity at " + std::to_string(a);
  }
  auto check_triple = [&](Index a, Index b, Index c) -> std::string {
    auto tag = [&](const char* what) {
      return std::string(what) + " fails at (" + std::to_string(a) + "," + std::to_string(b) +
             "," + std::to_string(c) + ")";
    };
    if (R.add(a, b) != R.add(b, a)) return tag("additive commutativity");
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return tag("additive associativity");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return tag("multiplicative associativity");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return tag("left distributivity");
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))) return tag("right distributivity");
    return {};
  };
  const auto cube = static_cast<std::size_t>(n) * n * n;
  if (R.repr_kind() == ReprKind::DenseTable && cube <= cfg.exhaustive_triple_budget) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (auto v = check_triple(a, b, c); !v.empty()) return v;
    return {};
  }
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t i = 0; i < cfg.sample_budget; ++i) {
    const Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (auto v = check_triple(a, b, c); !v.empty()) return v;
  }
  return {};
}

inline FiniteRing FiniteRing::from_operations(Index order, Index zero, Index one,
                                              std::string label, BinaryOp add, BinaryOp mul,
                                              UnaryOp neg, const RingConfig& cfg) {
  if (order == 0) throw InvalidParameter("ring order must be positive");
  if (order > cfg.max_order)
    throw CapacityError("ring " + label + " of order " + std::to_string(order) +
                        " exceeds the representation budget " + std::to_string(cfg.max_order));
  auto data = std::make_shared<detail::RingData>();
  data->order = order;
  data->zero = zero;
  data->one = one;
  data->label = std::move(label);
  data->neg_table.resize(order);
  for (Index a = 0; a < order; ++a) data->neg_table[a] = neg(a);
  const std::size_t cap = std::min<std::size_t>(cfg.dense_cap, std::size_t{1} << 16);
  if (order <= cap) {
    data->kind = ReprKind::DenseTable;
    const auto cells = static_cast<std::size_t>(order) * order;
    data->add_table.resize(cells);
    data->mul_table.resize(cells);
    for (Index a = 0; a < order; ++a)
      for (Index b = 0; b < order; ++b) {
        const std::size_t cell = static_cast<std::size_t>(a) * order + b;
        data->add_table[cell] = static_cast<std::uint16_t>(add(a, b));
        data->mul_table[cell] = static_cast<std::uint16_t>(mul(a, b));
      }
  } else {
    data->kind = ReprKind::Structured;
    data->add_fn = std::move(add);
    data->mul_fn = std::move(mul);
  }
  FiniteRing ring(std::move(data));
  if (cfg.validate) {
    if (auto violation = find_axiom_violation(ring, cfg); !violation.empty())
      throw InvalidParameter("ring " + ring.label() + " violates ring axioms: " + violation);
  }
  return ring;
}

/// Mixed-radix helpers shared by the tuple-encoded constructions. The first
/// coordinate is the most significant digit, so index order is the
/// lexicographic order of the tuples.
inline std::vector<Index> decode_digits(Index index, const std::vector<Index>& radices) {
  std::vector<Index> digits(radices.size());
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = index % radices[k];
    index /= radices[k];
  }
  return digits;
}

inline Index encode_digits(const std::vector<Index>& digits, const std::vector<Index>& radices) {
  Index index = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) index = index * radices[k] + digits[k];
  return index;
}

inline std::size_t checked_product(const std::vector<Index>& radices, std::size_t limit,
                                   const std::string& what) {
  std::size_t total = 1;
  for (Index r : radices) {
    if (r != 0 && total > limit / r)
      throw CapacityError(what + " exceeds the representation budget " + std::to_string(limit));
    total *= r;
  }
  if (total > limit)
    throw CapacityError(what + " exceeds the representation budget " + std::to_string(limit));
  return total;
}

}  // namespace vnl
