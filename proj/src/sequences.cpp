#include "hankel/sequences.hpp"

#include <json.hpp>
#include <stdexcept>

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"

namespace hankel {

// Defined in the generated translation unit holding the bundled data file.
extern const char* const kBundledSequenceTerms;

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Rational r(long v) { return Rational(v); }

std::vector<SequenceSpec> build_registry() {
  const auto terms = parse_known_terms(kBundledSequenceTerms);
  auto lookup = [&](const std::string& name) {
    for (const auto& [key, values] : terms) {
      if (key == name) return values;
    }
    throw std::runtime_error("bundled data file has no entry for " + name);
  };
  auto make = [&](std::string name, RecurrenceCoeffs coeffs, std::optional<std::string> base,
                  Provenance params) {
    SequenceSpec spec{name, std::move(coeffs), lookup(name), std::move(base), params, Provenance::Derived};
    return spec;
  };
  std::vector<SequenceSpec> out;
  out.push_back(make("motzkin", RecurrenceCoeffs({}, r(1), {}, r(1)), "1", Provenance::Paper));
  out.push_back(make("schroeder_large", RecurrenceCoeffs({r(2)}, r(3), {}, r(2)), "2^binom(n,2)",
                     Provenance::Paper));
  out.push_back(make("catalan", RecurrenceCoeffs({r(1)}, r(2), {}, r(1)), "1", Provenance::Derived));
  out.push_back(make("central_binomial", RecurrenceCoeffs({r(2)}, r(2), {r(2)}, r(1)), "2^(n-1)",
                     Provenance::Derived));
  out.push_back(make("central_trinomial", RecurrenceCoeffs({}, r(1), {r(2)}, r(1)), "2^(n-1)",
                     Provenance::Derived));
  out.push_back(make("delannoy_central", RecurrenceCoeffs({}, r(3), {r(4)}, r(2)), "2^(n-1) * 2^binom(n,2)",
                     Provenance::Derived));
  out.push_back(make("riordan", RecurrenceCoeffs({r(0)}, r(1), {}, r(1)), "1", Provenance::Derived));
  out.push_back(make("fine", RecurrenceCoeffs({r(0)}, r(2), {}, r(1)), "1", Provenance::Derived));
  return out;
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::Paper ? "PAPER" : "DERIVED"; }

const std::vector<SequenceSpec>& registry() {
  static const std::vector<SequenceSpec> entries = build_registry();
  return entries;
}

const SequenceSpec& find_sequence(const std::string& name) {
  for (const auto& spec : registry()) {
    if (spec.name == name) return spec;
  }
  throw std::invalid_argument("unknown sequence: " + name);
}

std::vector<std::pair<std::string, std::vector<Rational>>> parse_known_terms(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("sequence data: top level must be an object");
  std::vector<std::pair<std::string, std::vector<Rational>>> out;
  for (const auto& [name, body] : doc.items()) {
    std::vector<Rational> values;
    for (const auto& t : body.at("terms")) values.push_back(Rational::parse(t.get<std::string>()));
    out.emplace_back(name, std::move(values));
  }
  return out;
}

Rational shifted_hankel_direct(const SequenceSpec& seq, std::size_t n, std::size_t d) {
  if (n == 0) return 1;
  if (seq.known_terms.size() < 2 * n - 1 + d) {
    throw InsufficientDataError("shifted_hankel_direct: " + seq.name + " has only " +
                                std::to_string(seq.known_terms.size()) + " bundled terms");
  }
  return det_fraction_free<Rational>(hankel_matrix<Rational>(seq.known_terms, n, d));
}

bool eq71_check(const SequenceSpec& seq, std::size_t n, std::size_t d) {
  const Rational lhs = shifted_hankel_direct(seq, n, d) / hankel_base_det(seq.coeffs, n);
  const PolySequence p = build_family(seq.coeffs, FamilyKind::P, n + d);
  RatMatrix a(idx(d), idx(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(idx(i), idx(j)) = poly_taylor_coeff(p[n + i], static_cast<unsigned>(j), 0);
  }
  const Rational rhs = sign_power(static_cast<long>(n * d)) * det_fraction_free<Rational>(a);
  return lhs == rhs;
}

Rational binomial_poly(long upper, long lower) {
  if (lower < 0) return 0;
  Rational acc(1);
  for (long k = 0; k < lower; ++k) acc = acc * Rational(upper - k) / Rational(k + 1);
  return acc;
}

Rational motzkin_shift_closed_form(std::size_t n, std::size_t d) {
  RatMatrix a(idx(d), idx(d));
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      const long top = static_cast<long>(n + i) - static_cast<long>(j);
      Rational entry(0);
      for (long b = 0; top - 3 * b >= 0; ++b) {
        entry += sign_power(b) * binomial_poly(static_cast<long>(j), top - 3 * b) *
                 binomial_poly(static_cast<long>(j) + b - 1, b);
      }
      a(idx(i - 1), idx(j - 1)) = entry;
    }
  }
  return det_fraction_free<Rational>(a);
}

Rational schroeder_shift_closed_form(std::size_t n, std::size_t d) {
  RatMatrix a(idx(d), idx(d));
  for (long i = 1; i <= static_cast<long>(d); ++i) {
    for (long j = 1; j <= static_cast<long>(d); ++j) {
      const long shift = static_cast<long>(n) + i - j;
      Rational entry(0);
      for (long k = 1; k <= j - 1; ++k) {
        entry += pow(Rational(2), j - k - 1) * binomial_poly(2 * j - k - 2, j - 1) *
                 binomial_poly(k + shift - 1, shift);
      }
      // binom(2j-b-2, j-2) is read as binom(2j-b-2, j-b): equal for j >= 2 and
      // equal to 1 at j = b = 1, where the partial-fraction coefficient is 1.
      for (long b = 1; b <= j; ++b) {
        entry += sign_power(b) * pow(Rational(2), static_cast<long>(n) + i - 1) *
                 binomial_poly(2 * j - b - 2, j - b) * binomial_poly(b + shift - 1, shift);
      }
      a(idx(static_cast<std::size_t>(i - 1)), idx(static_cast<std::size_t>(j - 1))) = entry;
    }
  }
  const long half = static_cast<long>(d * (d + 1) / 2);
  const long n_choose_2 = static_cast<long>(n * (n > 0 ? n - 1 : 0) / 2);
  return sign_power(half) * pow(Rational(2), n_choose_2) * det_fraction_free<Rational>(a);
}

Rational motzkin_chebyshev_derivative(std::size_t n, std::size_t j) {
  if (n < j) return 0;
  const long top = static_cast<long>(n - j);
  Rational acc(0);
  for (long b = 0; top - 3 * b >= 0; ++b) {
    acc += sign_power(top - b) * binomial_poly(static_cast<long>(j) + 1, top - 3 * b) *
           binomial_poly(static_cast<long>(j) + b, b);
  }
  return factorial(static_cast<unsigned>(j)) * acc;
}

}  // namespace hankel
