#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Malformed arguments: size mismatches, out-of-range parameters, inputs that
// violate an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that lies outside the domain of the requested computation.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation word that does not label a minimal circuit at the given level.
class InvalidCycleError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UnboundedError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// A ground collection that is not closed under the sorting operation.
class NotSortClosedError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class EmptyMatroidError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// A method that does not apply to the given input (e.g. descent volume of a
// polytope that is not contained in a hypersimplex).
class MethodDomainError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace alcove
