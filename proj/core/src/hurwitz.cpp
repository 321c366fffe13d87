#include <cmath>
#include <limits>

#include "chipoly/errors.hpp"
#include "chipoly/numeric.hpp"

namespace chipoly {

namespace {

constexpr Real kEpsilon = std::numeric_limits<Real>::epsilon();
constexpr std::size_t kBernoulliTerms = 100;

std::vector<Real> build_bernoulli_table() {
  // B_0 .. B_{2 kBernoulliTerms} from sum_{k=0}^{n} C(n+1, k) B_k = 0.
  const std::size_t top = 2 * kBernoulliTerms;
  std::vector<Rational> b(top + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) {
      if (!b[k].is_zero()) acc += binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)) * b[k];
    }
    b[n] = -acc / Rational(n + 1);
  }
  std::vector<Real> out(kBernoulliTerms);
  for (std::size_t j = 0; j < kBernoulliTerms; ++j) {
    out[j] = (b[2 * j] / factorial(static_cast<unsigned>(2 * j))).to_long_double();
  }
  return out;
}

// (e^z - 1) / z, accurate near z = 0.
Complex exprel(Complex z) {
  if (std::abs(z) > 0.5L) return (std::exp(z) - Real(1)) / z;
  Complex term = 1;
  Complex sum = 1;
  for (int k = 2; k < 60; ++k) {
    term *= z / Real(k);
    sum += term;
    if (std::abs(term) < kEpsilon * std::abs(sum)) break;
  }
  return sum;
}

Complex log_gamma_stirling(Complex z) {
  // Valid for |z| >= 25; the first omitted term is below 1e-30.
  const auto& coeffs = even_bernoulli_over_factorial(14);
  Complex series = 0;
  const Complex z2 = z * z;
  Complex zpow = z;
  for (std::size_t k = 1; k <= 13; ++k) {
    // B_{2k} / (2k (2k-1) z^{2k-1}) = (B_{2k}/(2k)!) (2k-2)! / z^{2k-1}
    Real fact = 1;
    for (std::size_t i = 2; i <= 2 * k - 2; ++i) fact *= static_cast<Real>(i);
    series += coeffs[k] * fact / zpow;
    zpow *= z2;
  }
  return (z - Real(0.5)) * std::log(z) - z + Real(0.5) * std::log(2 * kPi) + series;
}

struct EulerMaclaurin {
  Complex regular;  // everything except (K + a)^{1-s} / (s - 1)
  Real log_shift;   // log(K + a)
};

// Number of directly summed terms for argument s: large enough that the
// Euler-Maclaurin corrections decay geometrically for the first ~30 terms.
std::size_t em_cutoff(Complex s) {
  return static_cast<std::size_t>(std::ceil((std::abs(s) + 60.0L) / kPi));
}

EulerMaclaurin euler_maclaurin(Complex s, Real a, std::size_t cutoff) {
  Complex sum = 0;
  for (std::size_t n = 0; n < cutoff; ++n) sum += real_pow(static_cast<Real>(n) + a, -s);
  const Real shift = static_cast<Real>(cutoff) + a;
  const Real log_shift = std::log(shift);
  const Complex head = std::exp(-s * log_shift);
  sum += head / Real(2);

  const auto& coeffs = even_bernoulli_over_factorial(kBernoulliTerms);
  Complex rising = s;                    // (s)_{2j-1}
  Complex power = head / shift;          // (K + a)^{-s-2j+1}
  const Real inv_shift2 = 1 / (shift * shift);
  Real previous = std::numeric_limits<Real>::infinity();
  for (std::size_t j = 1; j < kBernoulliTerms; ++j) {
    const Complex term = coeffs[j] * rising * power;
    const Real size = std::abs(term);
    // The series is asymptotic: stop before the terms start growing.
    if (size > previous && j > 4) break;
    sum += term;
    if (size <= kEpsilon * 1e-2L * std::abs(sum)) break;
    previous = size;
    rising *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
    power *= inv_shift2;
  }
  return {sum, log_shift};
}

bool is_one(Complex s) { return s == Complex(1, 0); }

// zeta(-n, a) = -B_{n+1}(a) / (n + 1): the Euler-Maclaurin expansion with no
// directly summed terms terminates, so nothing cancels.
Real hurwitz_at_nonpositive_integer(std::size_t n, Real a) {
  const auto& coeffs = even_bernoulli_over_factorial(kBernoulliTerms);
  if (n / 2 + 1 >= kBernoulliTerms) throw DomainError("argument too far left for the Bernoulli table");
  const Real s = -static_cast<Real>(n);
  Real sum = std::pow(a, static_cast<Real>(n + 1)) / (s - 1) + std::pow(a, static_cast<Real>(n)) / 2;
  Real rising = s;  // (s)_{2j-1}
  for (std::size_t j = 1; 2 * j - 1 <= n; ++j) {
    sum += coeffs[j] * rising * std::pow(a, static_cast<Real>(n + 1 - 2 * j));
    rising *= (s + static_cast<Real>(2 * j - 1)) * (s + static_cast<Real>(2 * j));
  }
  return sum;
}

bool is_nonpositive_integer(Complex s) { return s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real()); }

Complex l_chi_reflected(const PeriodicFunction& chi, Complex s) {
  // zeta(s, h/N) = 2 Gamma(1-s) / (2 pi N)^{1-s}
  //                * sum_r cos(pi (1-s)/2 - 2 pi r h / N) zeta(1-s, r/N)
  const std::size_t period = chi.period();
  const auto n_real = static_cast<Real>(period);
  const Complex t = Real(1) - s;
  Complex total = 0;
  for (std::size_t r = 1; r <= period; ++r) {
    Complex weight = 0;
    for (std::size_t h = 1; h <= period; ++h) {
      const Real value = chi.real_value(static_cast<std::int64_t>(h));
      if (value == 0) continue;
      const Real angle = 2 * kPi * static_cast<Real>((r * h) % period) / n_real;
      weight += value * std::cos(kPi * t / Real(2) - angle);
    }
    if (weight == Complex(0)) continue;
    total += weight * hurwitz_zeta(t, static_cast<Real>(r) / n_real);
  }
  const Complex prefactor = Real(2) * complex_gamma(t) * std::exp(-t * std::log(2 * kPi * n_real));
  return real_pow(n_real, -s) * prefactor * total;
}

}  // namespace

Complex real_pow(Real x, Complex s) { return std::exp(s * std::log(x)); }

const std::vector<Real>& even_bernoulli_over_factorial(std::size_t count) {
  static const std::vector<Real> table = build_bernoulli_table();
  if (count > table.size()) throw DomainError("Bernoulli table holds " + std::to_string(table.size()) + " terms");
  return table;
}

Complex complex_gamma(Complex z) {
  if (z.real() < 0.5L) {
    if (z.imag() == 0 && z.real() == std::floor(z.real())) {
      throw PoleError("Gamma has a pole at the non-positive integer " + std::to_string(static_cast<double>(z.real())));
    }
    return kPi / (std::sin(kPi * z) * complex_gamma(Real(1) - z));
  }
  Complex product = 1;
  while (std::abs(z) < 25.0L) {
    product *= z;
    z += Real(1);
  }
  return std::exp(log_gamma_stirling(z)) / product;
}

Complex hurwitz_zeta(Complex s, Real a) {
  if (!(a > 0 && a <= 1)) throw DomainError("Hurwitz parameter must lie in (0, 1]");
  if (is_one(s)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  if (is_nonpositive_integer(s)) return hurwitz_at_nonpositive_integer(static_cast<std::size_t>(-s.real()), a);
  const std::size_t cutoff = em_cutoff(s);
  const auto em = euler_maclaurin(s, a, cutoff);
  return em.regular + std::exp((Real(1) - s) * em.log_shift) / (s - Real(1));
}

Complex l_chi_numeric(const PeriodicFunction& chi, Complex s) {
  if (s.real() < -0.5L) return l_chi_reflected(chi, s);
  if (is_one(s) && !chi.zero_sum()) throw PoleError("L_chi has a pole at s = 1 when chi does not sum to zero");

  const std::size_t period = chi.period();
  const auto n_real = static_cast<Real>(period);
  const std::size_t cutoff = em_cutoff(s);
  Complex regular = 0;
  Complex pole_part = 0;
  for (std::size_t a = 1; a <= period; ++a) {
    const Real value = chi.real_value(static_cast<std::int64_t>(a));
    if (value == 0) continue;
    const auto em = euler_maclaurin(s, static_cast<Real>(a) / n_real, cutoff);
    regular += value * em.regular;
    if (chi.zero_sum()) {
      // (K+a)^{1-s}/(s-1) minus the common 1/(s-1), which sums to zero.
      const Complex z = (Real(1) - s) * em.log_shift;
      pole_part -= value * em.log_shift * exprel(z);
    } else {
      pole_part += value * std::exp((Real(1) - s) * em.log_shift) / (s - Real(1));
    }
  }
  return real_pow(n_real, -s) * (regular + pole_part);
}

}  // namespace chipoly
