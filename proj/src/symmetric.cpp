#include "hankel/symmetric.hpp"

#include <functional>

#include "hankel/errors.hpp"

namespace hankel {

MultiPoly elementary_symmetric(std::size_t d, std::size_t k) {
  if (k > d) return MultiPoly::constant(d, 0);
  MultiPoly::Terms terms;
  Exponent e(d, 0);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      terms.emplace(e, Rational(1));
      return;
    }
    for (std::size_t i = start; i + left <= d; ++i) {
      e[i] = 1;
      choose(i + 1, left - 1);
      e[i] = 0;
    }
  };
  choose(0, k);
  return MultiPoly(d, std::move(terms));
}

MultiPoly sym_reduce(const MultiPoly& p) {
  if (!p.is_symmetric()) throw SymmetryError("sym_reduce: polynomial is not symmetric");
  const std::size_t d = p.nvars();
  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= d; ++k) e.push_back(elementary_symmetric(d, k));

  MultiPoly rest = p;
  MultiPoly::Terms out;
  while (!rest.is_zero()) {
    const auto [lead, coeff] = rest.leading_term();
    Exponent pattern(d, 0);
    if (lead.size() == d) {
      // The leading monomial of a symmetric polynomial has non-increasing exponents.
      for (std::size_t j = 0; j < d; ++j) {
        const unsigned next = j + 1 < d ? lead[j + 1] : 0;
        if (lead[j] < next) throw SymmetryError("sym_reduce: leading exponent not sorted");
        pattern[j] = lead[j] - next;
      }
    }
    MultiPoly product = MultiPoly::constant(d, coeff);
    for (std::size_t j = 0; j < d; ++j) {
      for (unsigned k = 0; k < pattern[j]; ++k) product *= e[j];
    }
    rest -= product;
    out[pattern] += coeff;
  }
  return MultiPoly(d, std::move(out));
}

MultiPoly expand_elementary(const MultiPoly& in_elementary, std::size_t d) {
  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= d; ++k) e.push_back(elementary_symmetric(d, k));
  return in_elementary.substitute(e) + MultiPoly::constant(d, 0);
}

Rational evaluate_elementary(const MultiPoly& in_elementary, const std::vector<Rational>& e_values) {
  return in_elementary.evaluate(e_values);
}

}  // namespace hankel
