#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

/// Base of every error raised by the library. The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically indistinguishable from) a pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A summation needed more terms than the configured hard cap.
class NonconvergenceError : public Error {
 public:
  using Error::Error;
};

/// An input violated a structural precondition (alternation, growth certificate).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Factorization or table lookup beyond the configured resource bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Requested accuracy cannot be delivered by the numerical method.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Exact division by a series with zero constant term.
class DivisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsl
