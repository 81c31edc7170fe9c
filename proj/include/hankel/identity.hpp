#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hankel/orthopoly.hpp"

namespace hankel {

struct WeightedPoint {
  Rational y;
  unsigned multiplicity = 1;
};

/// Points x_1..x_d given as distinct values y_i with multiplicities m_i.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// Throws RepeatedPointError if two y values coincide, std::invalid_argument for multiplicity 0.
  explicit PointConfiguration(std::vector<WeightedPoint> points);

  /// Groups equal values of a flat list into multiplicities (first-occurrence order).
  static PointConfiguration from_list(const std::vector<Rational>& xs);

  const std::vector<WeightedPoint>& points() const { return points_; }
  /// Sum of multiplicities.
  std::size_t d() const;
  /// Number of distinct points.
  std::size_t e() const { return points_.size(); }
  bool all_simple() const;
  /// x_1..x_d with every y_i repeated m_i times.
  std::vector<Rational> expanded() const;

 private:
  std::vector<WeightedPoint> points_;
};

/// lambda_0..lambda_d with lambda_d = 1, the coefficients of q(x) = sum lambda_k x^k.
class LinearCombination {
 public:
  /// Throws std::invalid_argument unless the last entry is 1.
  explicit LinearCombination(std::vector<Rational> lambda);

  const std::vector<Rational>& lambda() const { return lambda_; }
  std::size_t d() const { return lambda_.size() - 1; }
  UniPoly q() const { return UniPoly(lambda_); }

 private:
  std::vector<Rational> lambda_;
};

struct IdentityReport {
  std::size_t n = 0;
  std::size_t d = 0;
  Rational lhs;
  Rational rhs_ratio;
  Rational base_det;
  int sign = 1;
  bool equal = false;
};

/// q(x) = prod (x + x_l), expanded with multiplicities.
LinearCombination lambda_from_points(const PointConfiguration& cfg);

/// det_{0<=i,j<n} (sum_k weights[k] * m_{i+j+k}) for arbitrary weights.
Rational combined_hankel_det(const MomentSequence& m, const std::vector<Rational>& weights, std::size_t n);

/// Left side of the determinant identity: det(sum_k lambda_k m_{i+j+k}), 1 for n = 0.
Rational lhs_hankel(const MomentSequence& m, const LinearCombination& lc, std::size_t n);

/// det(p_{n+i-1}(-x_j)) / prod_{i<j} (x_i - x_j) for pairwise distinct points.
/// Throws RepeatedPointError for repeated points.
Rational rhs_distinct(const PolySequence& fam, const PointConfiguration& cfg, std::size_t n);

/// Confluent form: block columns p^{(j-1)}_{n+i-1}(-y)/(j-1)! divided by
/// prod_{i<j} (y_i - y_j)^{m_i m_j}. Agrees with rhs_distinct on simple points.
Rational rhs_confluent(const PolySequence& fam, const PointConfiguration& cfg, std::size_t n);

/// Evaluates all three equivalent right-hand sides against the left-hand side.
/// `moments` overrides the moment sequence on the left (e.g. to inject corrupted data).
IdentityReport verify_theorem1(const RecurrenceCoeffs& c, const PointConfiguration& cfg, std::size_t n,
                               const std::optional<MomentSequence>& moments = std::nullopt);

/// det_{0<=i,j<n} L(q p_i p_j).
Rational gram_form(const MomentSequence& m, const LinearCombination& lc, const PolySequence& fam,
                   std::size_t n);

/// The Hankel identity for (beta-alpha) det(alpha beta c + (alpha+beta) c' + c'') ...
/// evaluated with independent determinants. Requires cseq.size() >= 2n+2.
bool lemma3_check(const std::vector<Rational>& cseq, const Rational& alpha, const Rational& beta,
                  std::size_t n);

/// Row-multilinearity expansion of det_{0<=i,j<=M}(alpha c_{i+j} + c_{i+j+1}).
/// Returns (direct determinant, sum_r alpha^r det(c_{i+j+[i>=r]})).
std::pair<Rational, Rational> shift_expansion(const std::vector<Rational>& cseq, const Rational& alpha,
                                              std::size_t M);

}  // namespace hankel
