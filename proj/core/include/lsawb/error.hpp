#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsawb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition or resource bound.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries a location string when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A defining identity fails on a specific basis triple. Fields are 0-based,
/// messages print 1-based indices; pair failures repeat the second index.
class IdentityViolation : public Error {
 public:
  IdentityViolation(const std::string& what, std::size_t i, std::size_t j, std::size_t k)
      : Error(what), i_(i), j_(j), k_(k) {}
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t i_, j_, k_;
};

/// Two computations that a theorem says must agree did not. Always a bug or a
/// falsified theorem; never a user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lsawb
