#include "hankel/heine.hpp"

#include "hankel/errors.hpp"

namespace hankel {

MomentSequence measure_moments(const DiscreteMeasure& m, std::size_t count) {
  MomentSequence out{std::vector<Rational>(count, Rational(0)), MomentSource::FromMeasure};
  for (const auto& atom : m.atoms) {
    Rational power = atom.w;
    for (std::size_t s = 0; s < count; ++s) {
      out.values[s] += power;
      power *= atom.x;
    }
  }
  return out;
}

Rational heine_multisum(const DiscreteMeasure& m, std::size_t n) {
  if (n == 0) return 1;
  const std::size_t k = m.atoms.size();
  if (k == 0) return 0;
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    tuples *= k;
    if (tuples > kHeineBudget) {
      throw BudgetError("heine_multisum: " + std::to_string(k) + "^" + std::to_string(n) +
                        " tuples exceed the enumeration budget");
    }
  }
  std::vector<std::size_t> pick(n, 0);
  Rational total(0);
  for (std::uint64_t step = 0; step < tuples; ++step) {
    Rational term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      term *= m.atoms[pick[i]].w;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational diff = m.atoms[pick[i]].x - m.atoms[pick[j]].x;
        term *= diff * diff;
      }
    }
    total += term;
    for (std::size_t i = 0; i < n && ++pick[i] == k; ++i) pick[i] = 0;
  }
  return total / factorial(static_cast<unsigned>(n));
}

DiscreteMeasure twist_measure(const DiscreteMeasure& m, const PointConfiguration& cfg) {
  DiscreteMeasure out;
  for (const auto& atom : m.atoms) {
    Rational w = atom.w;
    for (const auto& p : cfg.points()) w *= pow(p.y - atom.x, static_cast<long>(p.multiplicity));
    if (!w.is_zero()) out.atoms.push_back({atom.x, w});
  }
  return out;
}

bool heine_check(const DiscreteMeasure& m, const PointConfiguration& cfg, std::size_t n) {
  UniPoly factor(1);
  for (const auto& x : cfg.expanded()) factor *= UniPoly({x, Rational(-1)});
  const std::size_t d = cfg.d();
  const MomentSequence nu = measure_moments(m, n == 0 ? 0 : 2 * n - 1 + d);
  std::vector<Rational> weights(d + 1);
  for (std::size_t k = 0; k <= d; ++k) weights[k] = factor.coeff(k);
  const Rational lhs = combined_hankel_det(nu, weights, n);
  return lhs == heine_multisum(twist_measure(m, cfg), n);
}

}  // namespace hankel
