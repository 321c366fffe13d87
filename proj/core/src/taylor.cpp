#include "chipoly/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

void require_same_length(std::span<const Complex> roots, std::span<const Complex> svec) {
  if (roots.size() != svec.size()) throw LengthMismatch("roots and exponent vector differ in length");
}

Complex composition_sum(std::size_t j, std::size_t remaining, std::span<const Complex> roots,
                        std::span<const Complex> svec) {
  if (j + 1 == roots.size()) {
    Complex power = 1;
    for (std::size_t i = 0; i < remaining; ++i) power *= -roots[j];
    return binomial_neg(svec[j], remaining) * power;
  }
  Complex total = 0;
  Complex power = 1;
  for (std::size_t alpha = 0; alpha <= remaining; ++alpha) {
    total += binomial_neg(svec[j], alpha) * power * composition_sum(j + 1, remaining - alpha, roots, svec);
    power *= -roots[j];
  }
  return total;
}

}  // namespace

Complex binomial_neg(Complex s, std::size_t k) {
  Complex out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= (-s - static_cast<Real>(i)) / static_cast<Real>(i + 1);
  return out;
}

Complex taylor_coefficient(std::size_t ell, std::span<const Complex> roots, std::span<const Complex> svec) {
  require_same_length(roots, svec);
  if (roots.empty()) return ell == 0 ? Complex(1) : Complex(0);
  return composition_sum(0, ell, roots, svec);
}

std::vector<Complex> taylor_coefficients(std::size_t count, std::span<const Complex> roots,
                                         std::span<const Complex> svec) {
  require_same_length(roots, svec);
  std::vector<Complex> product(count, Complex(0));
  if (count == 0) return product;
  product[0] = 1;
  std::vector<Complex> factor(count);
  std::vector<Complex> next(count);
  for (std::size_t j = 0; j < roots.size(); ++j) {
    // (1 - x a)^{-s} = sum_k binom(-s, k) (-a)^k x^k
    factor[0] = 1;
    const Complex neg_s = -svec[j];
    for (std::size_t k = 1; k < count; ++k) {
      factor[k] = factor[k - 1] * (neg_s - static_cast<Real>(k - 1)) / static_cast<Real>(k) * (-roots[j]);
    }
    std::fill(next.begin(), next.end(), Complex(0));
    for (std::size_t i = 0; i < count; ++i) {
      if (product[i] == Complex(0)) continue;
      for (std::size_t k = 0; i + k < count; ++k) next[i + k] += product[i] * factor[k];
    }
    product.swap(next);
  }
  return product;
}

Real taylor_radius(std::span<const Complex> roots) {
  Real largest = 0;
  for (const auto& a : roots) largest = std::max(largest, std::abs(a));
  if (largest == 0) return std::numeric_limits<Real>::infinity();
  return 1 / (2 * largest);
}

Complex taylor_remainder(Real x, std::span<const Complex> roots, std::span<const Complex> svec, std::size_t order) {
  require_same_length(roots, svec);
  if (std::abs(x) > taylor_radius(roots)) throw DomainError("|x| exceeds the radius 1/(2 max|a_j|)");
  constexpr std::size_t kTailLimit = 4096;
  constexpr std::size_t kSettle = 8;
  for (std::size_t tail = 64; tail <= kTailLimit; tail *= 2) {
    const auto coeffs = taylor_coefficients(order + 1 + tail, roots, svec);
    Complex sum = 0;
    Real magnitude = 0;
    Real last = 0;
    Real xk = 1;
    for (std::size_t k = 0; k < tail; ++k) {
      const Complex term = coeffs[order + 1 + k] * xk;
      sum += term;
      magnitude += std::abs(term);
      if (k + kSettle >= tail) last = std::max(last, std::abs(term));
      xk *= x;
    }
    if (last <= 1e-24L * magnitude || magnitude == 0) return sum;
  }
  throw BudgetExceeded("Taylor tail did not converge within " + std::to_string(kTailLimit) + " terms");
}

}  // namespace chipoly
