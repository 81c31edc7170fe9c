#pragma once

#include <vector>

#include "hankel/multipoly.hpp"

namespace hankel {

/// e_k(x_1..x_d) as a MultiPoly in d variables; e_0 = 1.
MultiPoly elementary_symmetric(std::size_t d, std::size_t k);

/// Writes a symmetric polynomial in x_1..x_d as a polynomial in e_1..e_d.
///
/// The result is a MultiPoly in d variables where variable j (0-based) stands
/// for e_{j+1}. Uses leading-term elimination in graded lex order.
/// Throws SymmetryError if p is not symmetric.
MultiPoly sym_reduce(const MultiPoly& p);

/// Substitutes e_j(x_1..x_d) back into a polynomial produced by sym_reduce.
MultiPoly expand_elementary(const MultiPoly& in_elementary, std::size_t d);

/// Evaluates a polynomial in e_1..e_d at numeric values of the e_j.
Rational evaluate_elementary(const MultiPoly& in_elementary, const std::vector<Rational>& e_values);

}  // namespace hankel
