#include "hankel/orthopoly.hpp"

#include <stdexcept>

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"

namespace hankel {

RecurrenceCoeffs::RecurrenceCoeffs(std::vector<Rational> s_prefix, Rational s_tail,
                                   std::vector<Rational> t_prefix, Rational t_tail)
    : s_prefix_(std::move(s_prefix)),
      s_tail_(std::move(s_tail)),
      t_prefix_(std::move(t_prefix)),
      t_tail_(std::move(t_tail)) {
  if (t_tail_.is_zero()) throw std::invalid_argument("RecurrenceCoeffs: t tail must be non-zero");
  for (const auto& t : t_prefix_) {
    if (t.is_zero()) throw std::invalid_argument("RecurrenceCoeffs: t values must be non-zero");
  }
}

RecurrenceCoeffs RecurrenceCoeffs::constant(const Rational& s, const Rational& t) {
  return RecurrenceCoeffs({}, s, {}, t);
}

std::string to_string(MomentSource source) {
  switch (source) {
    case MomentSource::FromCoefficients: return "from-coefficients";
    case MomentSource::FromMeasure: return "from-measure";
    case MomentSource::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

MomentSequence moments_from_coeffs(const RecurrenceCoeffs& c, std::size_t count) {
  MomentSequence out;
  out.source = MomentSource::FromCoefficients;
  if (count == 0) return out;
  // weights[h] = total weight of paths of the current length ending at height h.
  // Only heights that can still return to 0 within `count - 1` steps matter.
  const std::size_t max_len = count - 1;
  std::vector<Rational> weights(max_len / 2 + 2, Rational(0));
  weights[0] = 1;
  out.values.push_back(1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t reachable = std::min(len, max_len - len);
    std::vector<Rational> next(weights.size(), Rational(0));
    for (std::size_t h = 0; h <= reachable; ++h) {
      Rational w = weights[h] * c.s(h);
      if (h > 0) w += weights[h - 1];
      if (h + 1 < weights.size()) w += weights[h + 1] * c.t(h);
      next[h] = std::move(w);
    }
    weights = std::move(next);
    out.values.push_back(weights[0]);
  }
  return out;
}

PolySequence build_family(const RecurrenceCoeffs& c, FamilyKind kind, std::size_t upto) {
  PolySequence seq;
  seq.kind = kind;
  const UniPoly x = UniPoly::x();
  UniPoly prev2;  // member n-2, starting from the zero polynomial p_{-1}
  UniPoly prev1(1);
  seq.family.push_back(prev1);
  seq.norms.push_back(1);
  for (std::size_t n = 1; n <= upto; ++n) {
    const Rational shift = kind == FamilyKind::P ? -c.s(n - 1) : c.s(n - 1);
    UniPoly next = (x + UniPoly(shift)) * prev1;
    if (n >= 2) next -= prev2 * c.t(n - 2);
    seq.family.push_back(next);
    seq.norms.push_back(seq.norms.back() * c.t(n - 1));
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return seq;
}

UniPoly poly_from_moments(const MomentSequence& m, std::size_t n) {
  if (n == 0) return UniPoly(1);
  if (m.size() < 2 * n) throw InsufficientDataError("poly_from_moments: need at least 2n moments");
  for (std::size_t k = 1; k <= n; ++k) {
    if (det_fraction_free<Rational>(moment_hankel(m, k)).is_zero()) {
      throw DegeneracyError(k, "poly_from_moments: Hankel minor of size " + std::to_string(k) + " vanishes");
    }
  }
  Matrix<UniPoly> a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const UniPoly x = UniPoly::x();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          UniPoly(m[i + j + 1]) - x * m[i + j];
    }
  }
  return det_fraction_free<UniPoly>(a).monic();
}

Rational hankel_base_det(const RecurrenceCoeffs& c, std::size_t n) {
  Rational acc(1);
  for (std::size_t i = 0; i + 1 < n; ++i) acc *= pow(c.t(i), static_cast<long>(n - i - 1));
  return acc;
}

std::vector<UniPoly> chebyshev_u(std::size_t upto) {
  std::vector<UniPoly> u;
  u.push_back(UniPoly(1));
  if (upto == 0) return u;
  const UniPoly two_x = UniPoly::x() * Rational(2);
  u.push_back(two_x);
  for (std::size_t n = 2; n <= upto; ++n) u.push_back(two_x * u[n - 1] - u[n - 2]);
  return u;
}

Rational apply_functional(const MomentSequence& m, const UniPoly& p) {
  if (p.is_zero()) return 0;
  if (m.size() < p.coeffs().size()) throw InsufficientDataError("apply_functional: not enough moments");
  Rational acc(0);
  for (std::size_t a = 0; a < p.coeffs().size(); ++a) acc += p.coeffs()[a] * m[a];
  return acc;
}

RatMatrix moment_hankel(const MomentSequence& m, std::size_t n, std::size_t shift) {
  return hankel_matrix<Rational>(m.values, n, shift);
}

}  // namespace hankel
