#pragma once

#include <stdexcept>
#include <string>

namespace rkhs {

/// Argument outside the domain of a formula (support of a measure, disk of
/// convergence, parameter range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iterative solver did not meet its stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent index below the admissible pole order of a space.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Requested variant exists in the theory but is not provided (Hardy s != 2).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Vector parity does not match the subspace a transform acts on.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rkhs
