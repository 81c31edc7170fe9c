#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/multipoly.hpp"
#include "hankel/rational.hpp"
#include "hankel/unipoly.hpp"

namespace Eigen {

namespace hankel_detail {
template <typename T>
struct ExactTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  // Exact scalars print in full; Eigen's stream operator only needs a value here.
  static constexpr int digits10() { return 0; }
};
}  // namespace hankel_detail

template <>
struct NumTraits<hankel::Rational> : hankel_detail::ExactTraits<hankel::Rational> {};
template <>
struct NumTraits<hankel::UniPoly> : hankel_detail::ExactTraits<hankel::UniPoly> {};
template <>
struct NumTraits<hankel::MultiPoly> : hankel_detail::ExactTraits<hankel::MultiPoly> {};

}  // namespace Eigen

namespace hankel {

/// Dense dynamic-size matrix over an exact scalar (Rational, UniPoly or MultiPoly).
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatMatrix = Matrix<Rational>;

/// Scalars usable by the exact kernels: a commutative ring with exact division.
template <typename S>
concept ExactScalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { exact_div(a, b) } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  S(0);
  S(1);
};

template <ExactScalar S>
void require_square(const Matrix<S>& m, const char* who) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(who) + ": matrix is not square");
}

template <ExactScalar S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
  }
  return m;
}

/// Plain triple-loop product; avoids Eigen's blocked kernels for non-POD scalars.
template <ExactScalar S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  Matrix<S> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <ExactScalar S>
Matrix<S> kronecker_product(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// prod_{i<j} (points[j] - points[i]); 1 for fewer than two points.
template <ExactScalar S>
S vandermonde_product(std::span<const S> points) {
  S acc(1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) acc = acc * (points[j] - points[i]);
  }
  return acc;
}

template <ExactScalar S>
S vandermonde_product(const std::vector<S>& points) {
  return vandermonde_product(std::span<const S>(points));
}

/// The Vandermonde matrix (points[i]^j).
template <ExactScalar S>
Matrix<S> vandermonde_matrix(std::span<const S> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Matrix<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    S p(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = p;
      p = p * points[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

/// n x n Hankel matrix (seq[i + j + shift]); throws if seq is too short.
template <ExactScalar S>
Matrix<S> hankel_matrix(std::span<const S> seq, std::size_t n, std::size_t shift = 0) {
  if (n > 0 && seq.size() < 2 * n - 1 + shift) {
    throw InsufficientDataError("hankel_matrix: sequence too short");
  }
  Matrix<S> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = seq[i + j + shift];
    }
  }
  return m;
}

template <ExactScalar S>
Matrix<S> hankel_matrix(const std::vector<S>& seq, std::size_t n, std::size_t shift = 0) {
  return hankel_matrix(std::span<const S>(seq), n, shift);
}

/// Copy of m with the listed (0-based, distinct) rows and columns removed.
template <ExactScalar S>
Matrix<S> delete_rows_cols(const Matrix<S>& m, std::span<const Eigen::Index> rows,
                           std::span<const Eigen::Index> cols) {
  auto keep = [](Eigen::Index count, std::span<const Eigen::Index> drop) {
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < count; ++i) {
      bool dropped = false;
      for (auto d : drop) dropped = dropped || d == i;
      if (!dropped) kept.push_back(i);
    }
    return kept;
  };
  const auto kr = keep(m.rows(), rows);
  const auto kc = keep(m.cols(), cols);
  Matrix<S> out(static_cast<Eigen::Index>(kr.size()), static_cast<Eigen::Index>(kc.size()));
  for (std::size_t i = 0; i < kr.size(); ++i) {
    for (std::size_t j = 0; j < kc.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(kr[i], kc[j]);
    }
  }
  return out;
}

}  // namespace hankel
