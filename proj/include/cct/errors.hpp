#ifndef CCT_ERRORS_HPP
#define CCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cct {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed JSON, schema violations, wrong arity.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class WrongDimension : public InputError {
 public:
  using InputError::InputError;
};

class EmptyColour : public InputError {
 public:
  using InputError::InputError;
};

class ZeroPoint : public InputError {
 public:
  using InputError::InputError;
};

class SizeBound : public InputError {
 public:
  using InputError::InputError;
};

/// Geometric degeneracy the caller may be able to repair (e.g. by perturbing).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class DegenerateTransversal : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class DegenerateInput : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class DegeneratePivot : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class NonGenericDirection : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class InvalidStart : public InputError {
 public:
  using InputError::InputError;
};

class NoCircuit : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class ConditionViolated : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// Something the underlying geometry proves impossible happened anyway.
/// Always a bug, never an expected runtime condition.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cct

#endif  // CCT_ERRORS_HPP
