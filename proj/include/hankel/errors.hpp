#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Matrix shape does not fit the operation (non-square input, mismatched sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An index argument lies outside the admissible range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Not enough moments / sequence terms to evaluate the requested object.
class InsufficientDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A leading principal Hankel minor vanished; the moment functional is degenerate.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(std::size_t failing_size, const std::string& what)
      : std::runtime_error(what), failing_size_(failing_size) {}

  std::size_t failing_size() const noexcept { return failing_size_; }

 private:
  std::size_t failing_size_;
};

/// Input polynomial is not invariant under permutation of its variables.
class SymmetryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two points of a configuration coincide where distinct points are required.
class RepeatedPointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration would exceed its hard budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a remainder.
class InexactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hankel
