#include "hankel/recurrence.hpp"

#include <stdexcept>

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"
#include "hankel/symmetric.hpp"

namespace hankel {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Number of leading entries that differ from the tail value.
std::size_t effective_prefix(const std::vector<Rational>& prefix, const Rational& tail) {
  std::size_t len = prefix.size();
  while (len > 0 && prefix[len - 1] == tail) --len;
  return len;
}

UniPoly charpoly_symbolic(const LinearCombination& lc, const Rational& s, const Rational& t) {
  const std::size_t d = lc.d();
  Matrix<MultiPoly> tensor(1, 1);
  tensor(0, 0) = MultiPoly::constant(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix<MultiPoly> block(2, 2);
    block(0, 0) = MultiPoly::variable(d, i) + MultiPoly::constant(d, s);
    block(0, 1) = MultiPoly::constant(d, t);
    block(1, 0) = MultiPoly::constant(d, -1);
    block(1, 1) = MultiPoly::constant(d, 0);
    tensor = kronecker_product<MultiPoly>(tensor, block);
  }
  const std::vector<MultiPoly> coeffs = char_poly_coeffs<MultiPoly>(tensor);
  // e_j = lambda_{d-j}
  std::vector<Rational> e_values(d);
  for (std::size_t j = 1; j <= d; ++j) e_values[j - 1] = lc.lambda()[d - j];
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& coeff : coeffs) {
    out.push_back(evaluate_elementary(sym_reduce(coeff + MultiPoly::constant(d, 0)), e_values));
  }
  return UniPoly(std::move(out), "X");
}

// prod over roots r of the monic q of h(r), as det h(companion(q)).
Rational resultant_with_monic(const UniPoly& q, const UniPoly& h) {
  const std::size_t d = static_cast<std::size_t>(q.degree());
  if (d == 0) return 1;
  RatMatrix comp = RatMatrix::Constant(idx(d), idx(d), Rational(0));
  for (std::size_t i = 1; i < d; ++i) comp(idx(i), idx(i - 1)) = 1;
  for (std::size_t i = 0; i < d; ++i) comp(idx(i), idx(d - 1)) = -q.coeff(i);
  RatMatrix acc = RatMatrix::Constant(idx(d), idx(d), Rational(0));
  for (std::size_t k = h.coeffs().size(); k-- > 0;) {
    acc = multiply<Rational>(acc, comp);
    for (std::size_t i = 0; i < d; ++i) acc(idx(i), idx(i)) += h.coeffs()[k];
  }
  return det_fraction_free<Rational>(acc);
}

UniPoly charpoly_power_sums(const LinearCombination& lc, const Rational& s, const Rational& t) {
  const std::size_t d = lc.d();
  const std::size_t size = std::size_t{1} << d;
  const UniPoly q = lc.q();
  // Tr(A^k) for A = [[u, t], [-1, 0]] is P_k(u): P_0 = 2, P_1 = u, P_k = u P_{k-1} - t P_{k-2}.
  const UniPoly u = UniPoly::x();
  std::vector<UniPoly> traces{UniPoly(2), u};
  for (std::size_t k = 2; k <= size; ++k) traces.push_back(u * traces[k - 1] - traces[k - 2] * t);
  // The x_i are the negated roots of q, so prod_i P_k(x_i + s) = prod_r P_k(s - r).
  const UniPoly shift_neg({s, Rational(-1)});
  std::vector<Rational> power_sums(size + 1);
  for (std::size_t k = 1; k <= size; ++k) power_sums[k] = resultant_with_monic(q, traces[k].compose(shift_neg));
  // Newton's identities for the elementary symmetric functions of the eigenvalues.
  std::vector<Rational> e(size + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= size; ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += sign_power(static_cast<long>(i - 1)) * e[k - i] * power_sums[i];
    e[k] = acc / Rational(k);
  }
  std::vector<Rational> coeffs(size + 1);
  for (std::size_t k = 0; k <= size; ++k) coeffs[size - k] = sign_power(static_cast<long>(k)) * e[k];
  return UniPoly(std::move(coeffs), "X");
}

}  // namespace

std::string to_string(WindowRule rule) {
  switch (rule) {
    case WindowRule::Cor9: return "cor9";
    case WindowRule::Remark2a: return "remark2a";
    case WindowRule::Remark2b: return "remark2b";
  }
  return "unknown";
}

WindowRule window_rule_from_string(const std::string& text) {
  if (text == "cor9") return WindowRule::Cor9;
  if (text == "remark2a") return WindowRule::Remark2a;
  if (text == "remark2b") return WindowRule::Remark2b;
  throw std::invalid_argument("unknown window rule: " + text);
}

ScaledHankelSeq scaled_hankel_seq(const RecurrenceCoeffs& c, const LinearCombination& lc, std::size_t count) {
  const MomentSequence m = moments_from_coeffs(c, 2 * count + lc.d());
  ScaledHankelSeq seq{{}, c, lc};
  seq.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    seq.values.push_back(lhs_hankel(m, lc, n) / hankel_base_det(c, n));
  }
  return seq;
}

UniPoly charpoly_tensor(const LinearCombination& lc, const Rational& s, const Rational& t,
                        CharpolyRoute route) {
  if (route == CharpolyRoute::Auto) route = lc.d() <= 3 ? CharpolyRoute::Symbolic : CharpolyRoute::PowerSum;
  return route == CharpolyRoute::Symbolic ? charpoly_symbolic(lc, s, t) : charpoly_power_sums(lc, s, t);
}

Rational c1_value(const LinearCombination& lc, const Rational& s) {
  Rational acc(0);
  Rational spow(1);
  for (const auto& lambda : lc.lambda()) {
    acc += lambda * spow;
    spow *= s;
  }
  return -acc;
}

bool symmetry_check(const RecurrenceSpec& spec, const Rational& t, std::size_t d) {
  const std::size_t size = std::size_t{1} << d;
  if (spec.order != size || spec.c.size() != size + 1) {
    throw DimensionError("symmetry_check: order must be 2^d");
  }
  for (std::size_t i = 0; i <= size; ++i) {
    // d (2^{d-1} - i), written as (d 2^d - 2 d i) / 2 to stay integral at d = 0.
    const long twice = static_cast<long>(d * size) - 2 * static_cast<long>(d * i);
    if (twice % 2 != 0) return false;
    if (!(spec.c[size - i] == pow(t, twice / 2) * spec.c[i])) return false;
  }
  return true;
}

bool verify_recurrence(const std::vector<Rational>& values, const RecurrenceSpec& spec) {
  if (spec.c.size() != spec.order + 1) throw DimensionError("verify_recurrence: malformed spec");
  const std::size_t start = std::max(spec.validity_start, spec.order);
  if (values.size() < start + spec.order + 4) {
    throw InsufficientDataError("verify_recurrence: need at least order + 4 instances past validity_start");
  }
  for (std::size_t n = start; n < values.size(); ++n) {
    Rational acc(0);
    for (std::size_t i = 0; i <= spec.order; ++i) acc += spec.c[i] * values[n - i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool verify_recurrence(const ScaledHankelSeq& seq, const RecurrenceSpec& spec) {
  return verify_recurrence(seq.values, spec);
}

std::optional<RecurrenceFit> fit_recurrence_detailed(const std::vector<Rational>& seq, std::size_t order,
                                                     std::size_t start) {
  if (start < order) throw std::invalid_argument("fit_recurrence: start must be at least the order");
  if (seq.size() < start + 2 * order + 2) throw InsufficientDataError("fit_recurrence: too few terms");
  const std::size_t rows = seq.size() - start;
  // Augmented system [H_{n-1} ... H_{n-order} | -H_n].
  RatMatrix a(idx(rows), idx(order + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t n = start + r;
    for (std::size_t i = 1; i <= order; ++i) a(idx(r), idx(i - 1)) = seq[n - i];
    a(idx(r), idx(order)) = -seq[n];
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < order && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && a(idx(pr), idx(col)).is_zero()) ++pr;
    if (pr == rows) continue;
    a.row(idx(pr)).swap(a.row(idx(row)));
    const Rational pivot = a(idx(row), idx(col));
    for (std::size_t j = col; j <= order; ++j) a(idx(row), idx(j)) /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a(idx(r), idx(col)).is_zero()) continue;
      const Rational factor = a(idx(r), idx(col));
      for (std::size_t j = col; j <= order; ++j) a(idx(r), idx(j)) -= factor * a(idx(row), idx(j));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!a(idx(r), idx(order)).is_zero()) return std::nullopt;
  }
  RecurrenceSpec spec;
  spec.order = order;
  spec.validity_start = start;
  spec.c.assign(order + 1, Rational(0));
  spec.c[0] = 1;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) spec.c[pivot_cols[r] + 1] = a(idx(r), idx(order));
  return RecurrenceFit{std::move(spec), pivot_cols.size()};
}

std::optional<RecurrenceSpec> fit_recurrence(const std::vector<Rational>& seq, std::size_t order,
                                             std::size_t start) {
  auto fit = fit_recurrence_detailed(seq, order, start);
  if (!fit) return std::nullopt;
  return std::move(fit->spec);
}

ValidityWindow validity_window(const RecurrenceCoeffs& c, std::size_t d) {
  const std::size_t size = std::size_t{1} << d;
  const std::size_t ps = effective_prefix(c.s_prefix(), c.s_tail());
  const std::size_t pt = effective_prefix(c.t_prefix(), c.t_tail());
  const std::size_t shift = std::max(ps > 0 ? ps - 1 : 0, pt);
  if (shift == 0) return {size, WindowRule::Remark2a};
  if (shift == 1) return {size + 1, WindowRule::Cor9};
  return {size + shift, WindowRule::Remark2b};
}

RecurrenceSpec synthesize_recurrence(const RecurrenceCoeffs& c, const LinearCombination& lc,
                                     CharpolyRoute route) {
  const UniPoly poly = charpoly_tensor(lc, c.s_tail(), c.t_tail(), route);
  RecurrenceSpec spec;
  spec.order = std::size_t{1} << lc.d();
  spec.c.resize(spec.order + 1);
  for (std::size_t i = 0; i <= spec.order; ++i) spec.c[i] = poly.coeff(spec.order - i);
  const ValidityWindow window = validity_window(c, lc.d());
  spec.validity_start = window.start;
  spec.window_rule = window.rule;
  return spec;
}

}  // namespace hankel
