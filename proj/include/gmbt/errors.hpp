#pragma once

#include <stdexcept>

namespace gmbt {

/// Input outside an operation's documented domain (includes NaN inputs).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The sample carries no usable information for the requested test
/// (e.g. zero variance); no p-value is defined.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gmbt
