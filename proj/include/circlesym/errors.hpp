#pragma once

#include <stdexcept>
#include <string>

namespace circlesym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two series of different truncation orders were combined, or an
/// evaluation needs more coefficients than a series carries.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Inverse requested for a series whose constant term is zero.
class NonUnit : public Error {
 public:
  using Error::Error;
};

/// Operation defined only in even complex dimension.
class ParityError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain-type invariant (bad weight, bad sign, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Component list does not match the declared fixed-point template.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class UnsupportedComponent : public Error {
 public:
  using Error::Error;
};

/// Argument outside the accepted range (search bounds, caps).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Search space larger than the configured node budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Configuration document does not match the JSON schema. `path` names the
/// first offending key, e.g. `components[1].weights`.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace circlesym
