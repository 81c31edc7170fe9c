#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hankel/heine.hpp"
#include "hankel/identity.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

/// Seeded source of small random exact instances; numerators and denominators stay within `bound`.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, long bound = 9) : rng_(seed), bound_(bound) {}

  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero_rational();

  /// Random prefixes of length <= max_prefix, then random tails; t never zero.
  RecurrenceCoeffs coeffs(std::size_t max_prefix = 3);
  /// count pairwise distinct rationals.
  std::vector<Rational> distinct_points(std::size_t count);
  /// Distinct points with multiplicities in [1, max_mult], total multiplicity d.
  PointConfiguration confluent_points(std::size_t d, unsigned max_mult);
  RatMatrix matrix(std::size_t n, bool allow_singular = true);
  DiscreteMeasure measure(std::size_t atoms);
  /// Monic lambda of length d+1 with random lower coefficients.
  LinearCombination lambda(std::size_t d);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace hankel
