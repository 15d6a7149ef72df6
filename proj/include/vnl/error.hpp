#pragma once

#include <stdexcept>
#include <string>

namespace vnl {

/// A construction or query received parameters outside its contract.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A representation or scanning budget would be exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent computations of the same quantity disagreed, or a
/// verified result failed its own re-check. Always an implementation bug
/// or a falsified theorem instance; never swallowed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vnl
