#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ikit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational literal, matrix file, flag value).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was not met by its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact determinant of a required pivot block or matrix is zero.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// sturm_count was asked about an interval whose endpoint is a root.
/// Callers are expected to move the endpoint and retry.
class EndpointRootError : public Error {
 public:
  using Error::Error;
};

/// Two isolated roots denote the same algebraic number, so no strict
/// order between them exists.
class EqualRootsError : public Error {
 public:
  EqualRootsError(std::size_t first, std::size_t second)
      : Error("isolated roots " + std::to_string(first) + " and " + std::to_string(second) +
              " are equal"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A seeded generator exhausted its attempt budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ikit
