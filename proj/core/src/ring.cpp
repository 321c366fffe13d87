#include "chipoly/ring.hpp"

#include <ostream>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

std::uint64_t reduce_signed(std::int64_t value, std::uint64_t prime) {
  const auto p = static_cast<std::int64_t>(prime);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

__extension__ using Wide = unsigned __int128;

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % m);
}

std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t prime) {
  std::int64_t old_r = static_cast<std::int64_t>(value % prime);
  std::int64_t r = static_cast<std::int64_t>(prime);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("value is not invertible modulo " + std::to_string(prime));
  return reduce_signed(old_s, prime);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(long value, std::uint64_t prime) : modulus_(prime) {
  if (prime < 2) throw DomainError("F_p needs a modulus >= 2");
  value_ = static_cast<std::int64_t>(reduce_signed(value, prime));
}

std::uint64_t Fp::residue() const {
  if (!bound()) throw DomainError("residue of an F_p element without modulus");
  return static_cast<std::uint64_t>(value_);
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.bound() && b.bound() && a.modulus_ != b.modulus_) {
    throw DomainError("mixing F_p elements of different moduli");
  }
  return a.bound() ? a.modulus_ : b.modulus_;
}

Fp Fp::inverse() const { return Fp(static_cast<long>(inverse_mod(residue(), modulus_)), modulus_); }

Fp Fp::pow(std::uint64_t exponent) const {
  Fp base = *this;
  Fp result = bound() ? Fp(1, modulus_) : Fp(1);
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

Fp operator+(const Fp& a, const Fp& b) {
  const std::uint64_t p = Fp::common_modulus(a, b);
  if (p == 0) return Fp(static_cast<long>(a.value_ + b.value_));
  return Fp(static_cast<long>((reduce_signed(a.value_, p) + reduce_signed(b.value_, p)) % p), p);
}

Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

Fp operator*(const Fp& a, const Fp& b) {
  const std::uint64_t p = Fp::common_modulus(a, b);
  if (p == 0) return Fp(static_cast<long>(a.value_ * b.value_));
  return Fp(static_cast<long>(mul_mod(reduce_signed(a.value_, p), reduce_signed(b.value_, p), p)), p);
}

Fp operator-(const Fp& a) {
  if (!a.bound()) return Fp(static_cast<long>(-a.value_));
  return Fp(static_cast<long>((a.modulus_ - static_cast<std::uint64_t>(a.value_)) % a.modulus_),
            a.modulus_);
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint64_t p = Fp::common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return reduce_signed(a.value_, p) == reduce_signed(b.value_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << x.representative();
}

}  // namespace chipoly
