// Error taxonomy shared by every module. Validation failures carry a witness
// in the message and map to exit code 2; resource-cap refusals map to exit 3.
#pragma once

#include <stdexcept>
#include <string>

namespace monoidlab {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAssociative : ValidationError {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : ValidationError("associativity fails at (" + std::to_string(a_) + ", " +
                        std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct BadIdentity : ValidationError {
  explicit BadIdentity(const std::string& what) : ValidationError(what) {}
};

struct OutOfRange : ValidationError {
  explicit OutOfRange(const std::string& what) : ValidationError(what) {}
};

struct EmptyGeneratingSet : ValidationError {
  EmptyGeneratingSet() : ValidationError("generating set is empty") {}
};

struct NotIdempotent : ValidationError {
  int element;
  explicit NotIdempotent(int e)
      : ValidationError("element " + std::to_string(e) + " is not idempotent"),
        element(e) {}
};

struct MonoidMismatch : ValidationError {
  explicit MonoidMismatch(const std::string& what) : ValidationError(what) {}
};

struct InvalidFilter : ValidationError {
  explicit InvalidFilter(const std::string& what) : ValidationError(what) {}
};

struct MalformedCategory : ValidationError {
  explicit MalformedCategory(const std::string& what) : ValidationError(what) {}
};

struct OracleViolation : ValidationError {
  explicit OracleViolation(const std::string& what) : ValidationError(what) {}
};

struct UnknownSystem : ValidationError {
  explicit UnknownSystem(const std::string& name)
      : ValidationError("unknown extension system: " + name) {}
};

struct ParseError : ValidationError {
  explicit ParseError(const std::string& what) : ValidationError(what) {}
};

struct SizeTooLarge : CapError {
  explicit SizeTooLarge(const std::string& what) : CapError(what) {}
};

}  // namespace monoidlab
