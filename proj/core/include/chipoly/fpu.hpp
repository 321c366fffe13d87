#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chipoly/polynomial.hpp"

namespace chipoly {

/// Element of F_p[u]/(u^p - u), stored as the p residues of u^0 .. u^{p-1}.
///
/// Like Fp, an element built from a bare integer is unbound and adopts the
/// prime of the first bound operand it meets.
class FpuElement {
 public:
  FpuElement() = default;
  FpuElement(long constant) : constant_(constant) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients of u^0, u^1, ...; exponents >= p are folded with u^p = u.
  FpuElement(std::uint64_t prime, const std::vector<std::uint64_t>& coeffs);

  /// The zero element of F_p[u]/(u^p - u).
  static FpuElement zero(std::uint64_t prime);
  /// The class of u.
  static FpuElement generator(std::uint64_t prime);

  std::uint64_t prime() const { return prime_; }
  bool bound() const { return prime_ != 0; }
  /// Coefficient of u^k (k < p) of a bound element.
  std::uint64_t coefficient(std::size_t k) const { return coeffs_.at(k); }
  bool is_zero() const;
  /// Integer value of an unbound element.
  long constant() const { return constant_; }

  friend FpuElement operator+(const FpuElement& a, const FpuElement& b);
  friend FpuElement operator-(const FpuElement& a, const FpuElement& b);
  friend FpuElement operator*(const FpuElement& a, const FpuElement& b);
  friend FpuElement operator-(const FpuElement& a);
  friend bool operator==(const FpuElement& a, const FpuElement& b);

 private:
  struct ZeroTag {};
  FpuElement(ZeroTag, std::uint64_t prime);
  FpuElement bind_like(std::uint64_t prime) const;

  std::uint64_t prime_ = 0;
  std::vector<std::uint64_t> coeffs_;  // size p when bound
  long constant_ = 0;                  // value when unbound
};

/// Exponent that u^k reduces to under u^p = u.
std::size_t fold_exponent(std::size_t k, std::uint64_t prime);

/// Reduces a polynomial in u with rational coefficients into F_p[u]/(u^p-u).
/// Throws BadPrimeError when p divides a denominator, DomainError when p is
/// not prime.
FpuElement fpu_reduce(const QPoly& q, std::uint64_t prime);

/// Display form with the highest power first, e.g. "4u^5 + 2u", "3", "0".
std::string to_display(const FpuElement& x);
std::ostream& operator<<(std::ostream& os, const FpuElement& x);

}  // namespace chipoly
