#include "chipoly/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

// Value of a non-negative integer below 2^128 as a long double.
long double small_mpz_to_long_double(const mpz_class& z) {
  long double result = 0.0L;
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = limbs; i-- > 0;) {
    result = std::ldexp(result, GMP_NUMB_BITS) +
             static_cast<long double>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
  }
  return result;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  mpz_class num = ::abs(value_.get_num());
  mpz_class den = value_.get_den();
  // Scale so that the integer quotient carries 72 significant bits.
  const long shift = 72 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  const mpz_class quotient = num / den;
  const long double magnitude = std::ldexp(small_mpz_to_long_double(quotient), static_cast<int>(-shift));
  return sign() < 0 ? -magnitude : magnitude;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) {
  Rational result;
  result.value_ = -x.value_;
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational factorial(unsigned n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return Rational(result);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return Rational(result);
}

}  // namespace chipoly
