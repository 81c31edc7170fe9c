#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Dense univariate polynomial over the rationals, coefficient i multiplies x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
/// The variable label only affects printing.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  UniPoly(I c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");

  /// The monomial x.
  static UniPoly x(std::string var = "x");
  /// c * x^k.
  static UniPoly monomial(const Rational& c, std::size_t k, std::string var = "x");

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
  UniPoly monic() const;

  Rational operator()(const Rational& at) const;
  /// Composition this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Quotient a / b; throws InexactDivisionError when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// p^{(j)}(y) / j!, the j-th Taylor coefficient of p at y.
Rational poly_taylor_coeff(const UniPoly& p, unsigned j, const Rational& y);

}  // namespace hankel
