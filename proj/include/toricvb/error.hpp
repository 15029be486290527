#pragma once

#include <stdexcept>
#include <string>

namespace toricvb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector length or ambient dimension disagrees with what an operation needs.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (ray index, cone size, d < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value violates a structural invariant (non-decreasing filtration, invalid
// shifting indices, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Raised by operations that need a non-split bundle.
class SplitBundleError : public Error {
 public:
  using Error::Error;
};

// Text that could not be parsed. `context()` names the field or position.
class ParseError : public Error {
 public:
  ParseError(const std::string& context, const std::string& what)
      : Error(context.empty() ? what : context + ": " + what), context_(context) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace toricvb
