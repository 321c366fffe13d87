#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace chipoly {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. The wrapper exists so that
/// arithmetic never yields a lazy expression template (which does not mix
/// well with `auto`) and so that the rest of the code base sees one small,
/// closed interface.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = mpz_class(static_cast<long>(value));
    } else {
      value_ = mpz_class(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Accepts `a` or `a/b` with optional sign, e.g. "-10/3".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "a" for integers, "a/b" otherwise. Round-trips through parse().
  std::string to_string() const;
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! as an exact integer.
Rational factorial(unsigned n);
/// Binomial coefficient C(n, k), zero when k > n.
Rational binomial(unsigned n, unsigned k);

}  // namespace chipoly
