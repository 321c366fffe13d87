#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace chipoly {

/// What the polynomial engine needs from a coefficient ring: construction
/// of integer constants (so `R(0)` and `R(1)` are the ring's zero and one)
/// together with +, -, * and equality.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b) {
  R(0);
  R(1);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
};

/// Element of the prime field F_p.
///
/// An element built from an integer without a modulus is "unbound": it
/// behaves as that integer and takes the modulus of whichever bound operand
/// it meets. This is what lets `Fp(0)` and `Fp(1)` serve as the ring's zero
/// and one in generic code.
class Fp {
 public:
  Fp() = default;
  Fp(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Fp(long value, std::uint64_t prime);

  std::uint64_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  /// Canonical residue in [0, p). Requires a bound element.
  std::uint64_t residue() const;
  /// The residue for bound elements, the plain integer otherwise.
  std::int64_t representative() const { return value_; }

  Fp inverse() const;
  Fp pow(std::uint64_t exponent) const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);

 private:
  static std::uint64_t common_modulus(const Fp& a, const Fp& b);
  // Residue in [0, p) for bound values, the plain integer otherwise.
  std::int64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Modular inverse of `value` mod `prime` by the extended Euclidean
/// algorithm. Throws DomainError when the inverse does not exist.
std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t prime);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

bool is_prime(std::uint64_t n);

}  // namespace chipoly
