#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vnl/element_set.hpp"
#include "vnl/ring.hpp"

namespace vnl {

enum class Sidedness { Left, Right, TwoSided };

inline const char* to_string(Sidedness side) {
  switch (side) {
    case Sidedness::Left: return "left";
    case Sidedness::Right: return "right";
    case Sidedness::TwoSided: return "two-sided";
  }
  return "?";
}

/// A subset of a ring's elements verified to be an ideal of the given side.
class SubsetIdeal {
 public:
  /// Verifies closure exhaustively; throws InvalidParameter naming the
  /// first failing instance.
  SubsetIdeal(FiniteRing ring, ElementSet members, Sidedness side, std::string label = {})
      : ring_(std::move(ring)), members_(std::move(members)), side_(side), label_(std::move(label)) {
    if (members_.universe() != ring_.order())
      throw InvalidParameter("ideal member set does not match ring order");
    if (auto failure = closure_failure(); !failure.empty())
      throw InvalidParameter("subset " + describe() + " is not a " + to_string(side_) +
                             " ideal of " + ring_.label() + ": " + failure);
    if (label_.empty()) label_ = format_members(members_.members());
  }

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  Sidedness side() const { return side_; }
  const std::string& label() const { return label_; }
  bool contains(Index a) const { return members_.contains(a); }
  std::size_t size() const { return members_.size(); }
  bool is_zero() const { return members_.size() == 1; }

  std::string describe() const { return format_members(members_.members()); }

 private:
  std::string closure_failure() const {
    const FiniteRing& R = ring_;
    if (!members_.contains(R.zero())) return "zero missing";
    const auto list = members_.members();
    for (Index a : list) {
      if (!members_.contains(R.neg(a))) return "not closed under negation at " + std::to_string(a);
      for (Index b : list)
        if (!members_.contains(R.add(a, b)))
          return "not closed under addition at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (Index r = 0; r < R.order(); ++r) {
        if (side_ != Sidedness::Right && !members_.contains(R.mul(r, a)))
          return "r*a escapes at r=" + std::to_string(r) + ", a=" + std::to_string(a);
        if (side_ != Sidedness::Left && !members_.contains(R.mul(a, r)))
          return "a*r escapes at a=" + std::to_string(a) + ", r=" + std::to_string(r);
      }
    }
    return {};
  }

  FiniteRing ring_;
  ElementSet members_;
  Sidedness side_;
  std::string label_;
};

}  // namespace vnl
