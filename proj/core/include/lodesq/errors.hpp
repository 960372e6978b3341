#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace lodesq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A kernel was evaluated at (or within 1e-12 of) a coincident coordinate.
class DegenerateCoordinate : public Error {
 public:
  using Error::Error;
};

/// Two points of a set share a coordinate; the energy is undefined there.
class DegenerateSet : public DegenerateCoordinate {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  DegenerateSet(std::size_t first, std::size_t second, std::size_t dim);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t first_;
  std::size_t second_;
  std::size_t dim_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact computation would exceed its operation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class UnrepairableSet : public Error {
 public:
  using Error::Error;
};

}  // namespace lodesq
