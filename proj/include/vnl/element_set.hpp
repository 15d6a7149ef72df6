#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace vnl {

using Index = std::uint32_t;
inline constexpr Index kNone = std::numeric_limits<Index>::max();

/// Membership flags over the element indices {0..universe-1} of one ring.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(Index universe) : flags_(universe, 0) {}

  Index universe() const { return static_cast<Index>(flags_.size()); }
  bool contains(Index a) const { return flags_[a] != 0; }
  std::size_t size() const { return count_; }
  bool full() const { return count_ == flags_.size(); }

  bool insert(Index a) {
    if (flags_[a]) return false;
    flags_[a] = 1;
    ++count_;
    return true;
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(count_);
    for (Index i = 0; i < universe(); ++i)
      if (flags_[i]) out.push_back(i);
    return out;
  }

  bool subset_of(const ElementSet& other) const {
    for (Index i = 0; i < universe(); ++i)
      if (flags_[i] && !other.flags_[i]) return false;
    return true;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.flags_ == b.flags_;
  }

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

inline std::string format_members(const std::vector<Index>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

}  // namespace vnl
