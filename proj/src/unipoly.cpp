#include "hankel/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::x(std::string var) { return UniPoly({Rational(0), Rational(1)}, std::move(var)); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k, std::string var) {
  std::vector<Rational> cs(k + 1);
  cs[k] = c;
  return UniPoly(std::move(cs), std::move(var));
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly out = *this;
  out.var_ = std::move(var);
  return out;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw std::domain_error("UniPoly::monic: zero polynomial");
  UniPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  acc.var_ = inner.var_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
  return UniPoly(std::move(out), var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
  UniPoly rem = *this;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.coeffs_.size() <= dd) return {UniPoly({}, var_), rem};
  std::vector<Rational> quot(rem.coeffs_.size() - dd);
  const Rational lead = divisor.leading();
  for (std::size_t k = rem.coeffs_.size(); k-- > dd;) {
    const Rational q = rem.coeffs_[k] / lead;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem.coeffs_[k - dd + i] -= q * divisor.coeffs_[i];
  }
  rem.trim();
  return {UniPoly(std::move(quot), var_), rem};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw InexactDivisionError("UniPoly exact_div: non-zero remainder");
  return q;
}

Rational poly_taylor_coeff(const UniPoly& p, unsigned j, const Rational& y) {
  // sum_k c_k * binom(k, j) * y^(k-j)
  Rational acc(0);
  Rational ypow(1);
  for (std::size_t k = j; k < p.coeffs().size(); ++k) {
    acc += p.coeffs()[k] * binomial(static_cast<long>(k), j) * ypow;
    ypow *= y;
  }
  return acc;
}

}  // namespace hankel
