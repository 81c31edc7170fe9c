#include "hankel/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

// Parses a decimal integer with optional sign starting at `pos`, advancing it.
mpz_class parse_integer(std::string_view text, std::size_t& pos, std::size_t offset) {
  std::string digits;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') digits.push_back('-');
    ++pos;
  }
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos]);
    ++pos;
  }
  if (pos == start) throw ParseError(offset + pos, "expected digit");
  return mpz_class(digits, 10);
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

Rational parse_at(std::string_view text, std::size_t offset) {
  std::size_t pos = skip_space(text, 0);
  mpz_class num = parse_integer(text, pos, offset);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      throw ParseError(offset + pos, "sign not allowed in denominator");
    }
    const std::size_t den_pos = pos;
    den = parse_integer(text, pos, offset);
    if (den == 0) throw ParseError(offset + den_pos, "zero denominator");
  }
  pos = skip_space(text, pos);
  if (pos != text.size()) throw ParseError(offset + pos, "unexpected character");
  return Rational(num, den);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) { return parse_at(text, 0); }

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exp) {
  if (exp < 0) return Rational(1) / pow(base, -exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (skip_space(text, 0) == text.size()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_at(text.substr(start, end - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hankel
