#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tetra {

/// Index or argument outside the range an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A user-supplied triangle whose row i does not hold i+1 entries.
class ShapeError : public std::invalid_argument {
 public:
  ShapeError(std::size_t row, const std::string& what)
      : std::invalid_argument(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Malformed text input. line() is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed lines that violate a file-level rule (e.g. index gaps).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem's hypothesis does not hold for the supplied data.
/// hypothesis() names the unmet condition.
class PreconditionError : public std::logic_error {
 public:
  PreconditionError(std::string hypothesis, const std::string& what)
      : std::logic_error(what), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Two computations that must agree did not.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tetra
