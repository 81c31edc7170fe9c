#include "hankel/random.hpp"

#include <algorithm>

namespace hankel {

long InstanceGenerator::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational InstanceGenerator::rational() { return Rational(integer(-bound_, bound_), integer(1, bound_)); }

Rational InstanceGenerator::nonzero_rational() {
  long num = 0;
  while (num == 0) num = integer(-bound_, bound_);
  return Rational(num, integer(1, bound_));
}

RecurrenceCoeffs InstanceGenerator::coeffs(std::size_t max_prefix) {
  std::vector<Rational> s(static_cast<std::size_t>(integer(0, static_cast<long>(max_prefix))));
  std::vector<Rational> t(static_cast<std::size_t>(integer(0, static_cast<long>(max_prefix))));
  for (auto& v : s) v = rational();
  for (auto& v : t) v = nonzero_rational();
  const Rational s_tail = rational();
  return RecurrenceCoeffs(std::move(s), s_tail, std::move(t), nonzero_rational());
}

std::vector<Rational> InstanceGenerator::distinct_points(std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    const Rational x = rational();
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

PointConfiguration InstanceGenerator::confluent_points(std::size_t d, unsigned max_mult) {
  std::vector<unsigned> mults;
  std::size_t left = d;
  while (left > 0) {
    const auto m = static_cast<unsigned>(integer(1, static_cast<long>(std::min<std::size_t>(max_mult, left))));
    mults.push_back(m);
    left -= m;
  }
  const std::vector<Rational> ys = distinct_points(mults.size());
  std::vector<WeightedPoint> pts;
  for (std::size_t i = 0; i < ys.size(); ++i) pts.push_back({ys[i], mults[i]});
  return PointConfiguration(std::move(pts));
}

RatMatrix InstanceGenerator::matrix(std::size_t n, bool allow_singular) {
  const auto size = static_cast<Eigen::Index>(n);
  RatMatrix a(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) a(i, j) = rational();
  }
  if (allow_singular && n >= 2 && integer(0, 3) == 0) {
    // Force a singular matrix: one row becomes a multiple of another.
    const auto dst = static_cast<Eigen::Index>(integer(0, size - 1));
    const auto src = (dst + 1) % size;
    const Rational k = rational();
    for (Eigen::Index j = 0; j < size; ++j) a(dst, j) = k * a(src, j);
  }
  return a;
}

DiscreteMeasure InstanceGenerator::measure(std::size_t atoms) {
  DiscreteMeasure m;
  for (const auto& x : distinct_points(atoms)) m.atoms.push_back({x, nonzero_rational()});
  return m;
}

LinearCombination InstanceGenerator::lambda(std::size_t d) {
  std::vector<Rational> l(d + 1);
  for (std::size_t k = 0; k < d; ++k) l[k] = rational();
  l[d] = 1;
  return LinearCombination(std::move(l));
}

}  // namespace hankel
