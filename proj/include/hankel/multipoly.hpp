#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x_1 > x_2 > ... > x_d. The last key of a map ordered this way is the leading monomial.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the rationals in variables x_1..x_d.
///
/// The variable count is fixed when the polynomial is built from variables or
/// explicit terms. Constants created from a scalar carry zero variables and
/// widen to the variable count of whatever they are combined with, so generic
/// matrix code can use MultiPoly(0) and MultiPoly(1).
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(std::size_t nvars, Terms terms);

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// x_{index+1} in a ring of `nvars` variables (index is 0-based).
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  Rational coeff(const Exponent& e) const;

  /// Leading (exponent, coefficient) in graded lex order; requires non-zero.
  const Terms::value_type& leading_term() const;

  Rational evaluate(std::span<const Rational> at) const;
  /// Substitutes `images[i]` for x_{i+1}; all images share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Swaps x_{i+1} and x_{j+1}.
  MultiPoly swap_variables(std::size_t i, std::size_t j) const;
  bool is_symmetric() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  /// Compares terms only; a constant is equal to the same constant in any ring.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Renders with variable names prefix1..prefixd.
  std::string str(const std::string& prefix = "x") const;

 private:
  void widen_to(std::size_t nvars);
  void add_term(const Exponent& e, const Rational& c);

  std::size_t nvars_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Multivariate exact division by repeated leading-term cancellation.
/// Throws InexactDivisionError if a remainder is left.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

}  // namespace hankel
