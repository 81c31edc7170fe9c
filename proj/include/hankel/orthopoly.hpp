#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/unipoly.hpp"

namespace hankel {

/// Coefficients (s_i), (t_i) of the three-term recurrence
///   p_n(x) = (x - s_{n-1}) p_{n-1}(x) - t_{n-2} p_{n-2}(x),
/// stored as a finite prefix followed by a constant tail.
class RecurrenceCoeffs {
 public:
  /// Throws std::invalid_argument if any t value (prefix or tail) is zero.
  RecurrenceCoeffs(std::vector<Rational> s_prefix, Rational s_tail, std::vector<Rational> t_prefix,
                   Rational t_tail);

  /// s_i = s, t_i = t for all i.
  static RecurrenceCoeffs constant(const Rational& s, const Rational& t);

  const Rational& s(std::size_t i) const { return i < s_prefix_.size() ? s_prefix_[i] : s_tail_; }
  const Rational& t(std::size_t i) const { return i < t_prefix_.size() ? t_prefix_[i] : t_tail_; }

  const std::vector<Rational>& s_prefix() const { return s_prefix_; }
  const std::vector<Rational>& t_prefix() const { return t_prefix_; }
  const Rational& s_tail() const { return s_tail_; }
  const Rational& t_tail() const { return t_tail_; }

  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;

 private:
  std::vector<Rational> s_prefix_;
  Rational s_tail_;
  std::vector<Rational> t_prefix_;
  Rational t_tail_;
};

enum class MomentSource { FromCoefficients, FromMeasure, UserSupplied };

std::string to_string(MomentSource source);

struct MomentSequence {
  std::vector<Rational> values;
  MomentSource source = MomentSource::UserSupplied;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
};

enum class FamilyKind {
  P,  ///< p_n = (x - s_{n-1}) p_{n-1} - t_{n-2} p_{n-2}
  F,  ///< f_n = (x + s_{n-1}) f_{n-1} - t_{n-2} f_{n-2}
};

struct PolySequence {
  std::vector<UniPoly> family;  ///< family[n] is monic of degree n
  FamilyKind kind = FamilyKind::P;
  std::vector<Rational> norms;  ///< norms[n] = t_0 * ... * t_{n-1}

  std::size_t size() const { return family.size(); }
  const UniPoly& operator[](std::size_t n) const { return family[n]; }
};

/// First `count` moments of the functional that makes the p-family orthogonal.
/// Computed as weighted Motzkin paths: up step 1, level step at height h
/// weight s(h), down step from height h weight t(h-1).
MomentSequence moments_from_coeffs(const RecurrenceCoeffs& c, std::size_t count);

/// Members 0..upto of the p- or f-family, with their norms.
PolySequence build_family(const RecurrenceCoeffs& c, FamilyKind kind, std::size_t upto);

/// Monic degree-n orthogonal polynomial of the functional with moments m,
/// from det(m_{i+j+1} - m_{i+j} x). Throws DegeneracyError naming the first
/// singular leading Hankel minor, InsufficientDataError if fewer than 2n moments.
UniPoly poly_from_moments(const MomentSequence& m, std::size_t n);

/// prod_{i=0}^{n-1} t_i^{n-i-1}, the n x n Hankel determinant of the moments.
Rational hankel_base_det(const RecurrenceCoeffs& c, std::size_t n);

/// U_0..U_upto, Chebyshev polynomials of the second kind.
std::vector<UniPoly> chebyshev_u(std::size_t upto);

/// L(p) = sum_a coeff_a(p) * m_a. Throws InsufficientDataError.
Rational apply_functional(const MomentSequence& m, const UniPoly& p);

/// n x n moment Hankel matrix (m_{i+j}).
RatMatrix moment_hankel(const MomentSequence& m, std::size_t n, std::size_t shift = 0);

}  // namespace hankel
