#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/orthopoly.hpp"

namespace hankel {

enum class Provenance { Paper, Derived };

std::string to_string(Provenance p);

/// A classical moment sequence with its recurrence data and bundled reference terms.
struct SequenceSpec {
  std::string name;
  RecurrenceCoeffs coeffs;
  std::vector<Rational> known_terms;
  /// Closed form of det(mu_{i+j}) when the recurrence data give one, e.g. "2^binom(n,2)".
  std::optional<std::string> base_hankel_closed_form;
  Provenance params_provenance = Provenance::Derived;
  Provenance terms_provenance = Provenance::Derived;
};

/// All registered sequences, in a fixed order. Reference terms come from the
/// data file bundled at build time.
const std::vector<SequenceSpec>& registry();

/// Throws std::invalid_argument for an unknown name.
const SequenceSpec& find_sequence(const std::string& name);

/// Parses a {"name": {"terms": [...]}} document into name -> terms pairs.
std::vector<std::pair<std::string, std::vector<Rational>>> parse_known_terms(const std::string& json_text);

/// det_{0<=i,j<n} (mu_{i+j+d}) from the bundled terms. Throws InsufficientDataError.
Rational shifted_hankel_direct(const SequenceSpec& seq, std::size_t n, std::size_t d);

/// Compares det(mu_{i+j+d}) / det(mu_{i+j}) against (-1)^{nd} det(p^{(j-1)}_{n+i-1}(0)/(j-1)!).
bool eq71_check(const SequenceSpec& seq, std::size_t n, std::size_t d);

/// Closed form of the shifted Motzkin Hankel determinant as a d x d determinant.
Rational motzkin_shift_closed_form(std::size_t n, std::size_t d);

/// Closed form of the shifted large-Schroeder Hankel determinant.
Rational schroeder_shift_closed_form(std::size_t n, std::size_t d);

/// p^{(j)}_n(0) for the Motzkin orthogonal polynomials, from the generating function.
Rational motzkin_chebyshev_derivative(std::size_t n, std::size_t j);

/// Binomial coefficient via the falling-factorial polynomial in the upper index;
/// zero for a negative lower index.
Rational binomial_poly(long upper, long lower);

}  // namespace hankel
