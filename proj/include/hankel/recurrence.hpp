#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/identity.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

/// Which statement fixes the first index where the order-2^d recurrence holds.
enum class WindowRule {
  Cor9,      ///< s_i = s, t_i = t for i >= 1: valid for n > 2^d
  Remark2a,  ///< t_i = t for all i: valid for n >= 2^d
  Remark2b,  ///< s_i = s for i > N, t_i = t for i >= N: valid for n >= 2^d + N
};

std::string to_string(WindowRule rule);
WindowRule window_rule_from_string(const std::string& text);

/// sum_{i=0}^{order} c_i H_{n-i} = 0 for n >= validity_start, with c_0 = 1.
struct RecurrenceSpec {
  std::size_t order = 0;
  std::vector<Rational> c;
  std::size_t validity_start = 0;
  std::optional<WindowRule> window_rule;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// H_0, H_1, ...: Hankel determinants of sum_k lambda_k mu_{i+j+k} divided by
/// the moment Hankel determinant t_0^{n-1} t_1^{n-2} ... t_{n-2}.
struct ScaledHankelSeq {
  std::vector<Rational> values;  ///< values[n] = H_n, values[0] = 1
  RecurrenceCoeffs coeffs;
  LinearCombination lambda;
};

ScaledHankelSeq scaled_hankel_seq(const RecurrenceCoeffs& c, const LinearCombination& lc, std::size_t count);

enum class CharpolyRoute {
  Auto,      ///< symbolic for d <= 3, power sums above
  Symbolic,  ///< MultiPoly characteristic polynomial reduced to elementary symmetric functions
  PowerSum,  ///< traces of powers via resultants against q, then Newton's identities
};

/// Characteristic polynomial of (x)_i [[x_i + s, t], [-1, 0]] where
/// prod (X + x_i) = sum lambda_k X^k. Monic of degree 2^d; coefficient of
/// X^{2^d - i} is c_i.
UniPoly charpoly_tensor(const LinearCombination& lc, const Rational& s, const Rational& t,
                        CharpolyRoute route = CharpolyRoute::Auto);

/// c_1 = -sum_j lambda_j s^j.
Rational c1_value(const LinearCombination& lc, const Rational& s);

/// c_{2^d - i} == t^{d (2^{d-1} - i)} c_i for all i. The relation is only
/// meaningful for d >= 1; with d = 0 it is checked literally and fails.
/// Throws DimensionError if spec.order != 2^d.
bool symmetry_check(const RecurrenceSpec& spec, const Rational& t, std::size_t d);

/// True iff the recurrence holds at every n in [validity_start, size).
/// Throws InsufficientDataError unless at least order + 4 instances are available.
bool verify_recurrence(const ScaledHankelSeq& seq, const RecurrenceSpec& spec);
bool verify_recurrence(const std::vector<Rational>& values, const RecurrenceSpec& spec);

struct RecurrenceFit {
  RecurrenceSpec spec;
  /// Rank of the order x order coefficient block; below `order` the solution is not unique.
  std::size_t rank = 0;

  bool unique() const { return rank == spec.order; }
};

/// Solves for c_1..c_order (c_0 = 1) from every instance n in [start, seq.size()).
/// Returns nullopt if the system is inconsistent; free variables of the reduced
/// echelon form are set to 0. Throws InsufficientDataError for fewer than
/// 2 order + 2 terms past start, std::invalid_argument if start < order.
std::optional<RecurrenceFit> fit_recurrence_detailed(const std::vector<Rational>& seq, std::size_t order,
                                                     std::size_t start);
std::optional<RecurrenceSpec> fit_recurrence(const std::vector<Rational>& seq, std::size_t order,
                                             std::size_t start);

struct ValidityWindow {
  std::size_t start;
  WindowRule rule;
};

/// First index of validity for coefficients c and d points.
ValidityWindow validity_window(const RecurrenceCoeffs& c, std::size_t d);

/// Order-2^d recurrence for H_n from charpoly_tensor(lambda, s_tail, t_tail).
RecurrenceSpec synthesize_recurrence(const RecurrenceCoeffs& c, const LinearCombination& lc,
                                     CharpolyRoute route = CharpolyRoute::Auto);

}  // namespace hankel
