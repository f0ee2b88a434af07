#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturmian {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value that should be irrational turned out to be rational.
class RationalValueError : public Error {
 public:
  using Error::Error;
};

/// An iteration limit was hit before the result was determined.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A word is not a factor of the subshift.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// The enumeration of a finite quotient missed a class found by sampling.
class IncompleteEnumeration : public Error {
 public:
  using Error::Error;
};

/// A truncation is too coarse to decide the requested property.
class Unresolved : public Error {
 public:
  Unresolved(const std::string& what, std::size_t count)
      : Error(what), count_(count) {}

  // Number of candidates found at the coarse truncation.
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Malformed textual input; names the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace sturmian
