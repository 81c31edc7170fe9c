#pragma once

#include <cstdint>
#include <vector>

#include "hankel/identity.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

struct Atom {
  Rational x;
  Rational w;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported formal measure; weights may have any sign.
struct DiscreteMeasure {
  std::vector<Atom> atoms;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;
};

/// Hard cap on the number of tuples heine_multisum will enumerate.
inline constexpr std::uint64_t kHeineBudget = 10'000'000;

/// nu_s = sum_atoms w x^s for s < count.
MomentSequence measure_moments(const DiscreteMeasure& m, std::size_t count);

/// (1/n!) sum over n-tuples of atoms of prod_{i<j} (u_i - u_j)^2 prod w.
/// Throws BudgetError when atoms^n exceeds kHeineBudget.
Rational heine_multisum(const DiscreteMeasure& m, std::size_t n);

/// Weights multiplied by prod_l (x_l - location); atoms with weight 0 are dropped.
DiscreteMeasure twist_measure(const DiscreteMeasure& m, const PointConfiguration& cfg);

/// det(sum_k lambda'_k nu_{i+j+k}) against heine_multisum of the twisted measure,
/// lambda' being the coefficients of prod_l (x_l - u) in u.
bool heine_check(const DiscreteMeasure& m, const PointConfiguration& cfg, std::size_t n);

}  // namespace hankel
