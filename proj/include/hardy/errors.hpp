#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (CLI exit status 2).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An operation was asked to act on a state whose stage does not match.
class StageMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Conditioning on an outcome whose probability is below the noise floor.
class ZeroProbabilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A projector list that is not a disjoint cover of the stage basis.
class PartitionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An evolution schedule that breaks the step-ordering rules.
class InvalidScheduleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Unreadable or inconsistent run configuration (CLI exit status 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was found broken, e.g. norm drift after applying a
// supposedly norm-preserving map (CLI exit status 3).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
