#include "hankel/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw DimensionError("MultiPoly: exponent length does not match variable count");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p;
  p.nvars_ = nvars;
  if (!c.is_zero()) p.terms_.emplace(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw IndexError("MultiPoly::variable: index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  MultiPoly p;
  p.nvars_ = nvars;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void MultiPoly::widen_to(std::size_t nvars) {
  if (nvars == nvars_) return;
  if (nvars < nvars_) throw DimensionError("MultiPoly: cannot shrink variable count");
  if (!is_constant() && nvars_ != 0) throw DimensionError("MultiPoly: variable count mismatch");
  const Rational c = constant_term();
  terms_.clear();
  if (!c.is_zero()) terms_.emplace(Exponent(nvars, 0), c);
  nvars_ = nvars;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const auto& [e, c] = *terms_.begin();
  return degree_of(e) == 0 ? c : Rational(0);
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const MultiPoly::Terms::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("MultiPoly::leading_term: zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> at) const {
  if (!is_constant() && at.size() != nvars_) throw DimensionError("MultiPoly::evaluate: wrong point dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(at[i], e[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (!is_constant() && images.size() != nvars_) throw DimensionError("MultiPoly::substitute: wrong image count");
  MultiPoly acc;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
  if (is_constant()) return *this;
  if (i >= nvars_ || j >= nvars_) throw IndexError("MultiPoly::swap_variables: index out of range");
  MultiPoly out;
  out.nvars_ = nvars_;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i], f[j]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

bool MultiPoly::is_symmetric() const {
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t i = 0; i + 1 < nvars_; ++i) {
    if (!(swap_variables(i, i + 1) == *this)) return false;
  }
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  const std::size_t n = std::max(nvars_, o.nvars_);
  widen_to(n);
  if (o.nvars_ == n) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly rhs = o;
  rhs.widen_to(n);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.nvars_ != n || b.nvars_ != n) {
    MultiPoly lhs = a;
    MultiPoly rhs = b;
    lhs.widen_to(n);
    rhs.widen_to(n);
    return lhs * rhs;
  }
  const MultiPoly& lhs = a;
  const MultiPoly& rhs = b;
  MultiPoly out;
  out.nvars_ = n;
  Exponent e(n);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  if (!a.is_constant() || !b.is_constant()) return false;
  return a.constant_term() == b.constant_term();
}

std::string MultiPoly::str(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (!(mag == Rational(1))) os << mag << "*";
      os << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("MultiPoly exact_div: division by zero");
  const std::size_t n = std::max(a.nvars(), b.nvars());
  MultiPoly rem = a + MultiPoly::constant(n, 0);
  const MultiPoly divisor = b + MultiPoly::constant(n, 0);
  const auto& [lead_e, lead_c] = divisor.leading_term();
  MultiPoly quot = MultiPoly::constant(n, 0);
  while (!rem.is_zero()) {
    const auto& [e, c] = rem.leading_term();
    Exponent le = lead_e;
    if (le.size() < e.size()) le.resize(e.size(), 0);
    if (!divides(le, e)) throw InexactDivisionError("MultiPoly exact_div: non-zero remainder");
    Exponent qe(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) qe[i] = e[i] - le[i];
    MultiPoly::Terms t;
    t.emplace(qe, c / lead_c);
    const MultiPoly step(qe.size(), std::move(t));
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

}  // namespace hankel
