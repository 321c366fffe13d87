#include "chipoly/fpu.hpp"

#include <ostream>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

std::uint64_t residue_of(long value, std::uint64_t prime) {
  const auto p = static_cast<long>(prime);
  long r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t residue_of(const mpz_class& value, std::uint64_t prime) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), prime);
  return r.get_ui();
}

std::uint64_t common_prime(const FpuElement& a, const FpuElement& b) {
  if (a.bound() && b.bound() && a.prime() != b.prime()) {
    throw DomainError("mixing F_p[u]/(u^p-u) elements of different primes");
  }
  return a.bound() ? a.prime() : b.prime();
}

}  // namespace

std::size_t fold_exponent(std::size_t k, std::uint64_t prime) {
  if (k < prime) return k;
  return (k - 1) % (prime - 1) + 1;
}

FpuElement::FpuElement(ZeroTag, std::uint64_t prime) : prime_(prime), coeffs_(prime, 0) {
  if (prime < 2) throw DomainError("F_p[u]/(u^p-u) needs a prime >= 2");
}

FpuElement::FpuElement(std::uint64_t prime, const std::vector<std::uint64_t>& coeffs)
    : FpuElement(ZeroTag{}, prime) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto& slot = coeffs_[fold_exponent(k, prime)];
    slot = (slot + coeffs[k] % prime) % prime;
  }
}

FpuElement FpuElement::zero(std::uint64_t prime) { return FpuElement(ZeroTag{}, prime); }

FpuElement FpuElement::generator(std::uint64_t prime) {
  FpuElement u(ZeroTag{}, prime);
  u.coeffs_[fold_exponent(1, prime)] = 1;
  return u;
}

bool FpuElement::is_zero() const {
  if (!bound()) return constant_ == 0;
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

FpuElement FpuElement::bind_like(std::uint64_t prime) const {
  if (bound() || prime == 0) return *this;
  FpuElement out(ZeroTag{}, prime);
  out.coeffs_[0] = residue_of(constant_, prime);
  return out;
}

FpuElement operator+(const FpuElement& a, const FpuElement& b) {
  const std::uint64_t p = common_prime(a, b);
  if (p == 0) return FpuElement(a.constant_ + b.constant_);
  FpuElement out = a.bind_like(p);
  const FpuElement rhs = b.bind_like(p);
  for (std::size_t k = 0; k < p; ++k) out.coeffs_[k] = (out.coeffs_[k] + rhs.coeffs_[k]) % p;
  return out;
}

FpuElement operator-(const FpuElement& a) {
  if (!a.bound()) return FpuElement(-a.constant_);
  FpuElement out = a;
  for (auto& c : out.coeffs_) c = (a.prime_ - c) % a.prime_;
  return out;
}

FpuElement operator-(const FpuElement& a, const FpuElement& b) { return a + (-b); }

FpuElement operator*(const FpuElement& a, const FpuElement& b) {
  const std::uint64_t p = common_prime(a, b);
  if (p == 0) return FpuElement(a.constant_ * b.constant_);
  const FpuElement lhs = a.bind_like(p);
  const FpuElement rhs = b.bind_like(p);
  FpuElement out = FpuElement::zero(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      auto& slot = out.coeffs_[fold_exponent(i + j, p)];
      slot = (slot + mul_mod(lhs.coeffs_[i], rhs.coeffs_[j], p)) % p;
    }
  }
  return out;
}

bool operator==(const FpuElement& a, const FpuElement& b) {
  const std::uint64_t p = common_prime(a, b);
  if (p == 0) return a.constant_ == b.constant_;
  return a.bind_like(p).coeffs_ == b.bind_like(p).coeffs_;
}

FpuElement fpu_reduce(const QPoly& q, std::uint64_t prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  std::vector<std::uint64_t> coeffs(q.size(), 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const std::uint64_t den = residue_of(q[k].denominator(), prime);
    if (den == 0) {
      throw BadPrimeError(std::to_string(prime) + " divides the denominator of " + q[k].to_string());
    }
    coeffs[k] = mul_mod(residue_of(q[k].numerator(), prime), inverse_mod(den, prime), prime);
  }
  return FpuElement(prime, coeffs);
}

std::string to_display(const FpuElement& x) {
  if (!x.bound()) return std::to_string(x.constant());
  std::string out;
  for (std::size_t k = x.prime(); k-- > 0;) {
    const std::uint64_t c = x.coefficient(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FpuElement& x) { return os << to_display(x); }

}  // namespace chipoly
