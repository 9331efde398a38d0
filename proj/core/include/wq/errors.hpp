#pragma once

#include <stdexcept>
#include <string>

namespace wq {

/// Division by the zero rational function, or evaluation at a pole.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bracket symbol that is not of the form alpha * M11(t) + (Laurent polynomial).
class NotDecomposable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Term pairs of a bracket sum that disagree on the multiple of M11.
class NonUniformBase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested a series the algebra data does not define (e.g. T2 for E6).
class NoExplicitDefinition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wq
