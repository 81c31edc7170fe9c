#pragma once

#include <array>
#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is itself a minor of the input, so each update
/// divides exactly by the previous pivot. Pivots are searched over the whole
/// trailing submatrix; a fully zero trailing block means the determinant is 0.
template <ExactScalar S>
S det_fraction_free(Matrix<S> m) {
  require_square(m, "det_fraction_free");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  bool negate = false;
  S previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index j = k; j < n && pr < 0; ++j) {
      for (Eigen::Index i = k; i < n; ++i) {
        if (!is_zero(m(i, j))) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) return S(0);
    if (pr != k) {
      m.row(pr).swap(m.row(k));
      negate = !negate;
    }
    if (pc != k) {
      m.col(pc).swap(m.col(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = S(0);
    }
    previous = m(k, k);
  }
  S det = m(n - 1, n - 1);
  return negate ? S(-det) : det;
}

/// Exact determinant by Dodgson condensation.
///
/// Level L holds all contiguous L x L minors; level L+1 is obtained from the
/// two previous levels through Jacobi's identity. When the interior minor used
/// as divisor is zero, that single entry is evaluated directly with
/// det_fraction_free on the corresponding contiguous block.
template <ExactScalar S>
S det_condensation(const Matrix<S>& m) {
  require_square(m, "det_condensation");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  Matrix<S> previous = Matrix<S>::Constant(n + 1, n + 1, S(1));
  Matrix<S> current = m;
  for (Eigen::Index level = 1; level < n; ++level) {
    const Eigen::Index size = n - level;
    Matrix<S> next(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        const S& divisor = previous(i + 1, j + 1);
        if (is_zero(divisor)) {
          next(i, j) = det_fraction_free<S>(m.block(i, j, level + 1, level + 1));
        } else {
          next(i, j) = exact_div(current(i, j) * current(i + 1, j + 1) -
                                     current(i, j + 1) * current(i + 1, j),
                                 divisor);
        }
      }
    }
    previous = std::move(current);
    current = std::move(next);
  }
  return current(0, 0);
}

/// Checks det A * det A_{i1,i2}^{j1,j2} == det A_{i1}^{j1} det A_{i2}^{j2} - det A_{i1}^{j2} det A_{i2}^{j1}
/// with independent determinant evaluations. Indices are 1-based, i1 < i2 and j1 < j2.
template <ExactScalar S>
bool jacobi_identity_check(const Matrix<S>& a, Eigen::Index i1, Eigen::Index i2, Eigen::Index j1,
                           Eigen::Index j2) {
  require_square(a, "jacobi_identity_check");
  const Eigen::Index n = a.rows();
  if (!(1 <= i1 && i1 < i2 && i2 <= n) || !(1 <= j1 && j1 < j2 && j2 <= n)) {
    throw IndexError("jacobi_identity_check: need 1 <= i1 < i2 <= N and 1 <= j1 < j2 <= N");
  }
  auto minor = [&](std::vector<Eigen::Index> rows, std::vector<Eigen::Index> cols) {
    for (auto& r : rows) --r;
    for (auto& c : cols) --c;
    return det_fraction_free<S>(delete_rows_cols<S>(a, rows, cols));
  };
  const S lhs = det_fraction_free<S>(a) * minor({i1, i2}, {j1, j2});
  const S rhs = minor({i1}, {j1}) * minor({i2}, {j2}) - minor({i1}, {j2}) * minor({i2}, {j1});
  return lhs == rhs;
}

/// Coefficients of det(X*I - m), index = power of X, via Faddeev-LeVerrier.
/// Only divides by the integers 1..n, so polynomial entries need no polynomial division.
template <ExactScalar S>
std::vector<S> char_poly_coeffs(const Matrix<S>& m) {
  require_square(m, "char_poly");
  const Eigen::Index n = m.rows();
  std::vector<S> c(static_cast<std::size_t>(n + 1), S(0));
  c[static_cast<std::size_t>(n)] = S(1);
  Matrix<S> aux = Matrix<S>::Constant(n, n, S(0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    aux = multiply<S>(m, aux);
    for (Eigen::Index i = 0; i < n; ++i) aux(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<S> product = multiply<S>(m, aux);
    S trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += product(i, i);
    c[static_cast<std::size_t>(n - k)] = trace * Rational(-1, k);
  }
  return c;
}

/// Monic characteristic polynomial det(X*I - m) of a rational matrix.
UniPoly char_poly(const RatMatrix& m);

}  // namespace hankel
