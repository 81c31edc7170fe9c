#include "support.hpp"

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"
#include "hankel/orthopoly.hpp"
#include "hankel/random.hpp"

using namespace hankel;
using hankel::test::qs;

namespace {

const RecurrenceCoeffs kMotzkin = RecurrenceCoeffs::constant(1, 1);
const RecurrenceCoeffs kSchroeder({2}, 3, {}, 2);

}  // namespace

TEST_CASE("RecurrenceCoeffs accessors and validation") {
  const RecurrenceCoeffs c(qs("1,2"), 5, qs("3"), Rational(1, 2));
  CHECK(c.s(0) == Rational(1));
  CHECK(c.s(1) == Rational(2));
  CHECK(c.s(7) == Rational(5));
  CHECK(c.t(0) == Rational(3));
  CHECK(c.t(4) == Rational(1, 2));
  CHECK_THROWS_AS(RecurrenceCoeffs({}, 1, qs("1,0"), 1), std::invalid_argument);
  CHECK_THROWS_AS(RecurrenceCoeffs::constant(1, 0), std::invalid_argument);
}

TEST_CASE("moments from the path recursion") {
  CHECK(moments_from_coeffs(kMotzkin, 7).values == qs("1,1,2,4,9,21,51"));
  CHECK(moments_from_coeffs(kSchroeder, 6).values == qs("1,2,6,22,90,394"));
  CHECK(moments_from_coeffs(kMotzkin, 0).values.empty());
  const MomentSequence m = moments_from_coeffs(kMotzkin, 3);
  CHECK(m.source == MomentSource::FromCoefficients);
  CHECK(to_string(m.source) == "from-coefficients");

  InstanceGenerator gen(21);
  for (int k = 0; k < 20; ++k) {
    const RecurrenceCoeffs c = gen.coeffs();
    const MomentSequence g = moments_from_coeffs(c, 3);
    CHECK(g[0] == Rational(1));
    CHECK(g[1] == c.s(0));
    CHECK(g[2] == c.s(0) * c.s(0) + c.t(0));
  }
}

TEST_CASE("polynomial families") {
  const UniPoly x = UniPoly::x();
  InstanceGenerator gen(22);
  const RecurrenceCoeffs c = gen.coeffs();
  const PolySequence p = build_family(c, FamilyKind::P, 12);
  REQUIRE(p.size() == 13);
  CHECK(p[0] == UniPoly(1));
  CHECK(p[1] == x - UniPoly(c.s(0)));
  CHECK(p[2] == (x - UniPoly(c.s(1))) * (x - UniPoly(c.s(0))) - UniPoly(c.t(0)));
  CHECK(p.norms[0] == Rational(1));
  CHECK(p.norms[3] == c.t(0) * c.t(1) * c.t(2));

  SUBCASE("f-family is the reflected p-family") {
    const PolySequence f = build_family(c, FamilyKind::F, 12);
    const UniPoly minus_x = -x;
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(f[n] == p[n].compose(minus_x) * sign_power(static_cast<long>(n)));
      CHECK(f[n].is_monic());
    }
  }

  SUBCASE("Motzkin family is U_n((x-1)/2)") {
    const PolySequence motzkin = build_family(kMotzkin, FamilyKind::P, 12);
    const std::vector<UniPoly> u = chebyshev_u(12);
    const UniPoly half_shift({Rational(-1, 2), Rational(1, 2)});
    for (std::size_t n = 0; n <= 12; ++n) CHECK(motzkin[n] == u[n].compose(half_shift));
  }
}

TEST_CASE("Chebyshev polynomials of the second kind") {
  const std::vector<UniPoly> u = chebyshev_u(8);
  CHECK(u[0] == UniPoly(1));
  CHECK(u[1] == UniPoly(qs("0,2")));
  CHECK(u[2] == UniPoly(qs("-1,0,4")));
  // (1 - 2xz + z^2) * sum U_n z^n = 1 up to z^8, coefficientwise in x.
  const UniPoly two_x(qs("0,2"));
  for (std::size_t n = 0; n <= 8; ++n) {
    UniPoly coeff = u[n];
    if (n >= 1) coeff -= two_x * u[n - 1];
    if (n >= 2) coeff += u[n - 2];
    CHECK(coeff == UniPoly(n == 0 ? 1 : 0));
  }
}

TEST_CASE("moment functional and orthogonality") {
  InstanceGenerator gen(23);
  for (int k = 0; k < 10; ++k) {
    const RecurrenceCoeffs c = gen.coeffs();
    const std::size_t top = 6;
    const MomentSequence m = moments_from_coeffs(c, 2 * top + 1);
    const PolySequence p = build_family(c, FamilyKind::P, top);
    CHECK(apply_functional(m, UniPoly(1)) == m[0]);
    CHECK(apply_functional(m, UniPoly::x() * p[0]) == m[1]);
    CHECK(apply_functional(m, p[1] * p[1]) == c.t(0));
    for (std::size_t a = 0; a <= top; ++a) {
      for (std::size_t b = 0; b <= top; ++b) {
        CHECK(apply_functional(m, p[a] * p[b]) == (a == b ? p.norms[a] : Rational(0)));
      }
    }
  }
  CHECK_THROWS_AS(apply_functional(moments_from_coeffs(kMotzkin, 2), UniPoly(qs("0,0,1"))), InsufficientDataError);
}

TEST_CASE("moment Hankel product formula") {
  CHECK(hankel_base_det(kMotzkin, 1) == Rational(1));
  CHECK(hankel_base_det(kMotzkin, 0) == Rational(1));
  const RecurrenceCoeffs c({}, 1, qs("2,3"), 5);
  CHECK(hankel_base_det(c, 3) == Rational(2 * 2 * 3));
  CHECK(hankel_base_det(kSchroeder, 3) == Rational(8));
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(hankel_base_det(kSchroeder, n) == pow(Rational(2), static_cast<long>(n * (n > 0 ? n - 1 : 0) / 2)));
  }
  InstanceGenerator gen(24);
  for (int k = 0; k < 20; ++k) {
    const RecurrenceCoeffs r = gen.coeffs();
    const MomentSequence m = moments_from_coeffs(r, 17);
    for (std::size_t n = 0; n <= 8; ++n) REQUIRE(det_fraction_free<Rational>(moment_hankel(m, n)) == hankel_base_det(r, n));
  }
}

TEST_CASE("orthogonal polynomials from moments") {
  CHECK(poly_from_moments(moments_from_coeffs(kMotzkin, 4), 0) == UniPoly(1));
  CHECK(poly_from_moments(moments_from_coeffs(kMotzkin, 4), 1) == UniPoly(qs("-1,1")));
  InstanceGenerator gen(25);
  for (int k = 0; k < 10; ++k) {
    const RecurrenceCoeffs c = gen.coeffs();
    const MomentSequence m = moments_from_coeffs(c, 12);
    const PolySequence p = build_family(c, FamilyKind::P, 5);
    for (std::size_t n = 0; n <= 5; ++n) REQUIRE(poly_from_moments(m, n) == p[n]);
  }
  SUBCASE("degenerate functional names the failing size") {
    // 1, 1, 1, ... has a singular 2x2 Hankel minor.
    const MomentSequence ones{qs("1,1,1,1,1,1"), MomentSource::UserSupplied};
    try {
      poly_from_moments(ones, 2);
      FAIL("expected a degeneracy error");
    } catch (const DegeneracyError& e) {
      CHECK(e.failing_size() == 2);
    }
  }
  CHECK_THROWS_AS(poly_from_moments(moments_from_coeffs(kMotzkin, 3), 2), InsufficientDataError);
}
