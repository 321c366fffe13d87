#include "chipoly/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chipoly/errors.hpp"
#include "chipoly/roots.hpp"
#include "chipoly/special_values.hpp"
#include "chipoly/taylor.hpp"

namespace chipoly {

namespace {

constexpr std::size_t kMaxTail = 4096;
constexpr std::size_t kSettle = 8;

Real max_modulus(std::span<const Complex> roots) {
  Real largest = 0;
  for (const auto& a : roots) largest = std::max(largest, std::abs(a));
  return largest;
}

// sum_j c_l(f_j(s)) for l < count, where f_j(s) = (s-1, .., s, .., s-1).
std::vector<Complex> combined_coefficients(std::span<const Complex> roots, Complex s, std::size_t count) {
  const std::size_t d = roots.size();
  std::vector<Complex> total(count, Complex(0));
  std::vector<Complex> svec(d, s - Real(1));
  for (std::size_t j = 0; j < d; ++j) {
    svec[j] = s;
    const auto c = taylor_coefficients(count, roots, svec);
    for (std::size_t l = 0; l < count; ++l) total[l] += c[l];
    svec[j] = s - Real(1);
  }
  return total;
}

// Combined coefficients long enough that sum_k C_{N+1+k} x^k has converged
// for every |x| <= 1/A.
std::vector<Complex> remainder_ready_coefficients(std::span<const Complex> roots, Complex s, std::size_t order,
                                                  unsigned offset_a) {
  const Real x = 1 / static_cast<Real>(offset_a);
  for (std::size_t tail = 64; tail <= kMaxTail; tail *= 2) {
    auto coeffs = combined_coefficients(roots, s, order + 1 + tail);
    Real magnitude = 0;
    Real last = 0;
    Real xk = 1;
    for (std::size_t k = 0; k < tail; ++k) {
      const Real size = std::abs(coeffs[order + 1 + k]) * xk;
      magnitude += size;
      if (k + kSettle >= tail) last = std::max(last, size);
      xk *= x;
    }
    if (last <= 1e-24L * magnitude || magnitude == 0) return coeffs;
  }
  throw BudgetExceeded("Taylor tail did not converge within " + std::to_string(kMaxTail) + " terms");
}

void check_plan(const ContinuationPlan& plan, Complex s) {
  const std::size_t d = plan.degree();
  if (d == 0) throw InvalidPolynomial("continuation needs a polynomial of degree >= 1");
  const Real threshold = 2 - static_cast<Real>(plan.taylor_order + 1) / static_cast<Real>(d);
  if (!(s.real() > threshold)) {
    throw DomainError("Taylor order " + std::to_string(plan.taylor_order) + " is too small for Re s = " +
                      std::to_string(static_cast<double>(s.real())));
  }
  if (static_cast<Real>(plan.offset_a) < 2 * max_modulus(plan.roots) || plan.offset_a < 1) {
    throw DomainError("offset A must be at least 2 max|a_j|");
  }
}

Complex chi_power_prefix(const PeriodicFunction& chi, unsigned offset_a, Complex z) {
  Complex acc = 0;
  for (unsigned n = 1; n < offset_a; ++n) {
    const Real value = chi.real_value(n);
    if (value != 0) acc += value * real_pow(static_cast<Real>(n), -z);
  }
  return acc;
}

Complex derivative_at(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<Real>(k) * coeffs[k];
  return acc;
}

}  // namespace

unsigned default_taylor_order(std::size_t degree, Complex s) {
  const Real lift = std::ceil(std::max<Real>(0, 2 - s.real()));
  return static_cast<unsigned>(degree) * (static_cast<unsigned>(lift) + 2);
}

unsigned default_offset(std::span<const Complex> roots, std::span<const Complex> coeffs) {
  auto a = static_cast<unsigned>(std::max<Real>(1, std::ceil(2 * max_modulus(roots))));
  while (evaluate_poly(coeffs, Complex(a)).real() <= 0) ++a;
  return a;
}

ContinuationPlan make_plan(const PeriodicFunction& chi, std::span<const Complex> roots, Real leading, Complex s,
                           const PlanOptions& options) {
  if (roots.empty()) throw InvalidPolynomial("continuation needs a polynomial of degree >= 1");
  if (!(leading > 0)) throw InvalidPolynomial("leading coefficient must be positive");
  ContinuationPlan plan{chi, {roots.begin(), roots.end()}, leading, poly_from_roots(roots, leading)};
  plan.offset_a = options.offset_a.value_or(default_offset(plan.roots, plan.coeffs));
  plan.taylor_order = options.taylor_order.value_or(default_taylor_order(plan.degree(), s));
  plan.tail_epsilon = options.tail_epsilon;
  plan.tail_max_terms = options.tail_max_terms;
  check_plan(plan, s);
  return plan;
}

ContinuationPlan make_plan(const PeriodicFunction& chi, const QPoly& poly, Complex s, const PlanOptions& options) {
  validate_l_polynomial(poly, 1);
  const auto coeffs = to_complex_coeffs(poly);
  const Real leading = poly.leading().to_long_double();
  std::vector<Complex> monic(coeffs);
  for (auto& c : monic) c /= leading;
  const auto roots = aberth_roots(monic);
  auto plan = make_plan(chi, roots, leading, s, options);
  plan.coeffs = coeffs;
  // The exact coefficients may move Re P(A) slightly; recheck the default.
  if (!options.offset_a) plan.offset_a = default_offset(plan.roots, plan.coeffs);
  return plan;
}

Complex continuation_eval(const ContinuationPlan& plan, Complex s) {
  check_plan(plan, s);
  const std::size_t d = plan.degree();
  const std::size_t order = plan.taylor_order;
  const Complex w = static_cast<Real>(d) * s - static_cast<Real>(d - 1);

  if (!plan.chi.zero_sum()) {
    for (std::size_t l = 0; l <= order; ++l) {
      if (std::abs(w + static_cast<Real>(l) - Real(1)) < 64 * std::numeric_limits<Real>::epsilon()) {
        throw PoleError("L_chi is evaluated at its pole; chi does not sum to zero");
      }
    }
  }

  const auto coeffs = remainder_ready_coefficients(plan.roots, s, order, plan.offset_a);

  Complex main = 0;
  for (std::size_t l = 0; l <= order; ++l) {
    if (coeffs[l] == Complex(0)) continue;
    const Complex z = w + static_cast<Real>(l);
    main += coeffs[l] * (l_chi_numeric(plan.chi, z) - chi_power_prefix(plan.chi, plan.offset_a, z));
  }

  // Remainder: sum_{n>=A} chi(n) n^{-(w+N+1)} sum_k C_{N+1+k} n^{-k}.
  const std::span<const Complex> tail(coeffs.begin() + static_cast<std::ptrdiff_t>(order + 1), coeffs.end());
  const Complex exponent = w + static_cast<Real>(order + 1);
  const Real decay = exponent.real() - 1;
  Complex remainder = 0;
  bool all_zero = std::all_of(tail.begin(), tail.end(), [](const Complex& c) { return c == Complex(0); });
  for (std::size_t n = plan.offset_a; !all_zero; ++n) {
    if (n - plan.offset_a >= plan.tail_max_terms) {
      throw BudgetExceeded("remainder series needs more than " + std::to_string(plan.tail_max_terms) + " terms");
    }
    const Real x = 1 / static_cast<Real>(n);
    Complex inner = 0;
    Real inner_size = 0;
    for (std::size_t k = tail.size(); k-- > 0;) {
      inner = inner * x + tail[k];
      inner_size = inner_size * x + std::abs(tail[k]);
    }
    const Complex scale = real_pow(static_cast<Real>(n), -exponent);
    const Real value = plan.chi.real_value(static_cast<std::int64_t>(n));
    if (value != 0) remainder += value * scale * inner;
    const Real bound = std::abs(scale) * inner_size * static_cast<Real>(n) / decay;
    if (bound < plan.tail_epsilon) break;
  }

  return real_pow(plan.leading_coeff, Real(1) - s) * (main + remainder);
}

Complex prefix_sum(const PeriodicFunction& chi, std::span<const Complex> coeffs, unsigned from, unsigned to,
                   Complex s) {
  Complex acc = 0;
  for (unsigned n = std::max(from, 1U); n < to; ++n) {
    const Real value = chi.real_value(n);
    if (value == 0) continue;
    const Complex z(static_cast<Real>(n));
    const Complex p = evaluate_poly(coeffs, z);
    if (p == Complex(0)) throw InvalidPolynomial("P vanishes at n = " + std::to_string(n));
    acc += value * derivative_at(coeffs, z) * std::exp(-s * std::log(p));
  }
  return acc;
}

Complex evaluate_l(const ContinuationPlan& plan, Complex s) {
  return continuation_eval(plan, s) + prefix_sum(plan.chi, plan.coeffs, 1, plan.offset_a, s);
}

Complex direct_sum(const PeriodicFunction& chi, std::span<const Complex> coeffs, unsigned offset_a, Complex s,
                   Real epsilon, std::size_t max_terms, Real margin) {
  if (!(s.real() > 1 + margin)) {
    throw ConvergenceError("direct summation needs Re s > " + std::to_string(static_cast<double>(1 + margin)));
  }
  if (coeffs.size() < 2) throw InvalidPolynomial("direct summation needs a polynomial of degree >= 1");
  const auto d = static_cast<Real>(coeffs.size() - 1);
  const Real decay = d * s.real() - d + 1;  // |P'(n)/P(n)^s| ~ n^{-decay}

  Real chi_size = 0;
  Real partial_max = 0;
  Real partial = 0;
  for (std::size_t k = 1; k <= chi.period(); ++k) {
    const Real value = chi.real_value(static_cast<std::int64_t>(k));
    chi_size = std::max(chi_size, std::abs(value));
    partial += value;
    partial_max = std::max(partial_max, std::abs(partial));
  }
  if (chi_size == 0) return 0;

  // |f| is eventually monotone; do not trust the estimate inside the root radius.
  Real root_bound = 0;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
    root_bound = std::max(root_bound, std::abs(coeffs[k] / coeffs.back()));
  }
  const Real trusted_from = 4 * (1 + root_bound) + static_cast<Real>(chi.period());
  const Real abel_factor = 2 * partial_max * (1 + std::abs(d * s - d + Real(1)) / decay);

  Complex sum = 0;
  for (std::size_t n = std::max(offset_a, 1U);; ++n) {
    if (n - std::max(offset_a, 1U) >= max_terms) {
      throw BudgetExceeded("direct summation needs more than " + std::to_string(max_terms) + " terms");
    }
    const Complex z(static_cast<Real>(n));
    const Complex p = evaluate_poly(coeffs, z);
    const Complex term = derivative_at(coeffs, z) * std::exp(-s * std::log(p));
    const Real value = chi.real_value(static_cast<std::int64_t>(n));
    if (value != 0) sum += value * term;
    if (static_cast<Real>(n) < trusted_from) continue;
    const Real size = std::abs(term);
    const Real bound = chi.zero_sum() ? abel_factor * size : chi_size * size * static_cast<Real>(n) / (decay - 1);
    if (bound < epsilon) break;
  }
  return sum;
}

std::vector<Complex> to_complex_coeffs(const QPoly& poly) {
  std::vector<Complex> out;
  out.reserve(poly.size());
  for (const auto& c : poly.coefficients()) out.emplace_back(c.to_long_double());
  return out;
}

}  // namespace chipoly
