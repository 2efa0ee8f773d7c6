#pragma once

#include <stdexcept>
#include <string>

namespace sqfree {

/// Caller violated a documented precondition (bad facet, unknown label, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `is_special_leaf` was asked about a facet that is not a leaf.
class NotALeaf : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A size cap (engine vertex cap, face budget, brute-force facet cap) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqfree
