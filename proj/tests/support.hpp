#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"

namespace hankel::test {

inline Rational q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> qs(const char* text) { return parse_rational_list(text); }

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

}  // namespace hankel::test

namespace doctest {
template <>
struct StringMaker<hankel::Rational> {
  static String convert(const hankel::Rational& r) { return r.str().c_str(); }
};
}  // namespace doctest
