#include "hankel/identity.hpp"

#include <stdexcept>

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"

namespace hankel {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_family(const PolySequence& fam, std::size_t top, const char* who) {
  if (fam.size() <= top) throw InsufficientDataError(std::string(who) + ": polynomial family too short");
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<WeightedPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].multiplicity == 0) throw std::invalid_argument("PointConfiguration: zero multiplicity");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i].y == points_[j].y) {
        throw RepeatedPointError("PointConfiguration: point " + points_[i].y.str() + " listed twice");
      }
    }
  }
}

PointConfiguration PointConfiguration::from_list(const std::vector<Rational>& xs) {
  std::vector<WeightedPoint> pts;
  for (const auto& x : xs) {
    bool merged = false;
    for (auto& p : pts) {
      if (p.y == x) {
        ++p.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) pts.push_back({x, 1});
  }
  return PointConfiguration(std::move(pts));
}

std::size_t PointConfiguration::d() const {
  std::size_t d = 0;
  for (const auto& p : points_) d += p.multiplicity;
  return d;
}

bool PointConfiguration::all_simple() const {
  for (const auto& p : points_) {
    if (p.multiplicity != 1) return false;
  }
  return true;
}

std::vector<Rational> PointConfiguration::expanded() const {
  std::vector<Rational> xs;
  for (const auto& p : points_) xs.insert(xs.end(), p.multiplicity, p.y);
  return xs;
}

LinearCombination::LinearCombination(std::vector<Rational> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty() || !(lambda_.back() == Rational(1))) {
    throw std::invalid_argument("LinearCombination: last coefficient must be 1");
  }
}

LinearCombination lambda_from_points(const PointConfiguration& cfg) {
  UniPoly q(1);
  for (const auto& x : cfg.expanded()) q *= UniPoly({x, Rational(1)});
  return LinearCombination(q.coeffs());
}

Rational combined_hankel_det(const MomentSequence& m, const std::vector<Rational>& weights, std::size_t n) {
  if (n == 0) return 1;
  const std::size_t d = weights.empty() ? 0 : weights.size() - 1;
  if (m.size() < 2 * n - 1 + d) throw InsufficientDataError("combined_hankel_det: not enough moments");
  RatMatrix a(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational entry(0);
      for (std::size_t k = 0; k < weights.size(); ++k) entry += weights[k] * m[i + j + k];
      a(idx(i), idx(j)) = entry;
    }
  }
  return det_fraction_free<Rational>(a);
}

Rational lhs_hankel(const MomentSequence& m, const LinearCombination& lc, std::size_t n) {
  return combined_hankel_det(m, lc.lambda(), n);
}

Rational rhs_distinct(const PolySequence& fam, const PointConfiguration& cfg, std::size_t n) {
  if (!cfg.all_simple()) throw RepeatedPointError("rhs_distinct: repeated point, use rhs_confluent");
  const std::vector<Rational> xs = cfg.expanded();
  const std::size_t d = xs.size();
  if (d == 0) return 1;
  require_family(fam, n + d - 1, "rhs_distinct");
  RatMatrix a(idx(d), idx(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(idx(i), idx(j)) = fam[n + i](-xs[j]);
  }
  // prod_{i<j} (x_i - x_j) = (-1)^{binom(d,2)} * vandermonde_product
  const Rational vdm = sign_power(static_cast<long>(d * (d - 1) / 2)) * vandermonde_product<Rational>(xs);
  return det_fraction_free<Rational>(a) / vdm;
}

Rational rhs_confluent(const PolySequence& fam, const PointConfiguration& cfg, std::size_t n) {
  const std::size_t d = cfg.d();
  if (d == 0) return 1;
  require_family(fam, n + d - 1, "rhs_confluent");
  RatMatrix a(idx(d), idx(d));
  std::size_t col = 0;
  for (const auto& [y, mult] : cfg.points()) {
    for (unsigned j = 0; j < mult; ++j, ++col) {
      for (std::size_t i = 0; i < d; ++i) a(idx(i), idx(col)) = poly_taylor_coeff(fam[n + i], j, -y);
    }
  }
  Rational denom(1);
  const auto& pts = cfg.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      denom *= pow(pts[i].y - pts[j].y, static_cast<long>(pts[i].multiplicity * pts[j].multiplicity));
    }
  }
  return det_fraction_free<Rational>(a) / denom;
}

IdentityReport verify_theorem1(const RecurrenceCoeffs& c, const PointConfiguration& cfg, std::size_t n,
                               const std::optional<MomentSequence>& moments) {
  const std::size_t d = cfg.d();
  const std::size_t needed = n == 0 ? 0 : 2 * n - 1 + d;
  const MomentSequence m = moments ? *moments : moments_from_coeffs(c, needed);
  const PolySequence p = build_family(c, FamilyKind::P, n + d);

  IdentityReport report;
  report.n = n;
  report.d = d;
  report.lhs = lhs_hankel(m, lambda_from_points(cfg), n);
  report.base_det = hankel_base_det(c, n);
  report.rhs_ratio = rhs_confluent(p, cfg, n);

  // Sign table for the three equivalent normalisations.
  const long nd = static_cast<long>(n * d);
  const long d_choose_2 = static_cast<long>(d * (d - 1) / 2);
  const Rational sign_ratio = sign_power(nd);              // ratio over prod (x_i - x_j)
  const Rational sign_vandermonde = sign_power(nd + d_choose_2);  // p-family over prod (x_j - x_i)
  const Rational sign_f_family(1);                         // f-family over prod (x_j - x_i)

  report.sign = sign_ratio.sign();
  bool equal = report.lhs == sign_ratio * report.base_det * report.rhs_ratio;

  if (cfg.all_simple() && d > 0) {
    const std::vector<Rational> xs = cfg.expanded();
    const Rational vdm = vandermonde_product<Rational>(xs);
    const PolySequence f = build_family(c, FamilyKind::F, n + d);
    RatMatrix pm(idx(d), idx(d));
    RatMatrix fm(idx(d), idx(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        pm(idx(i), idx(j)) = p[n + i](-xs[j]);
        fm(idx(i), idx(j)) = f[n + i](xs[j]);
      }
    }
    equal = equal && report.lhs == sign_vandermonde * report.base_det * det_fraction_free<Rational>(pm) / vdm;
    equal = equal && report.lhs == sign_f_family * report.base_det * det_fraction_free<Rational>(fm) / vdm;
  }
  report.equal = equal;
  return report;
}

Rational gram_form(const MomentSequence& m, const LinearCombination& lc, const PolySequence& fam,
                   std::size_t n) {
  if (n == 0) return 1;
  require_family(fam, n - 1, "gram_form");
  if (m.size() < 2 * (n - 1) + lc.d() + 1) throw InsufficientDataError("gram_form: not enough moments");
  const UniPoly q = lc.q();
  RatMatrix a(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly qp = q * fam[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational v = apply_functional(m, qp * fam[j]);
      a(idx(i), idx(j)) = v;
      a(idx(j), idx(i)) = v;
    }
  }
  return det_fraction_free<Rational>(a);
}

bool lemma3_check(const std::vector<Rational>& cseq, const Rational& alpha, const Rational& beta,
                  std::size_t n) {
  if (cseq.size() < 2 * n + 2) throw InsufficientDataError("lemma3_check: need 2n+2 sequence terms");
  const MomentSequence c{cseq, MomentSource::UserSupplied};
  const Rational quad = combined_hankel_det(c, {alpha * beta, alpha + beta, 1}, n);
  const Rational plain = combined_hankel_det(c, {1}, n + 1);
  const Rational a_small = combined_hankel_det(c, {alpha, 1}, n);
  const Rational a_big = combined_hankel_det(c, {alpha, 1}, n + 1);
  const Rational b_small = combined_hankel_det(c, {beta, 1}, n);
  const Rational b_big = combined_hankel_det(c, {beta, 1}, n + 1);
  return (beta - alpha) * quad * plain == a_small * b_big - b_small * a_big;
}

std::pair<Rational, Rational> shift_expansion(const std::vector<Rational>& cseq, const Rational& alpha,
                                              std::size_t M) {
  if (cseq.size() < 2 * M + 2) throw InsufficientDataError("shift_expansion: need 2M+2 sequence terms");
  const MomentSequence c{cseq, MomentSource::UserSupplied};
  const Rational lhs = combined_hankel_det(c, {alpha, 1}, M + 1);
  Rational rhs(0);
  for (std::size_t r = 0; r <= M + 1; ++r) {
    RatMatrix a(idx(M + 1), idx(M + 1));
    for (std::size_t i = 0; i <= M; ++i) {
      const std::size_t bump = i >= r ? 1 : 0;
      for (std::size_t j = 0; j <= M; ++j) a(idx(i), idx(j)) = cseq[i + j + bump];
    }
    rhs += pow(alpha, static_cast<long>(r)) * det_fraction_free<Rational>(a);
  }
  return {lhs, rhs};
}

}  // namespace hankel
