#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lgv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable tables, fields or orders.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation guard (basis size, degree, wall time) was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(std::string guard, const std::string& what)
      : Error("resource guard '" + guard + "' exceeded: " + what),
        guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// A solve-and-substitute schedule entry cannot be applied.
class ScheduleError : public Error {
 public:
  ScheduleError(std::string variable, const std::string& what)
      : Error("schedule error at '" + variable + "': " + what),
        variable_(std::move(variable)) {}

  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// Invalid chart/block parameters.
class SpecError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Dimension was requested for the unit ideal.
class EmptySchemeError : public Error {
 public:
  using Error::Error;
};

class UndefinedDegreeError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (e.g. an exact division left a remainder).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Maps do not satisfy f*g = g*f = s*Id.
class ConditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgv
