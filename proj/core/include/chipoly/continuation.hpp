#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chipoly/numeric.hpp"
#include "chipoly/periodic.hpp"
#include "chipoly/polynomial.hpp"

namespace chipoly {

/// Knobs for building a ContinuationPlan. Unset values are chosen
/// automatically from the roots and the evaluation point.
struct PlanOptions {
  std::optional<unsigned> offset_a;
  std::optional<unsigned> taylor_order;
  Real tail_epsilon = 1e-13L;
  std::size_t tail_max_terms = 10'000'000;
};

/// Everything needed to evaluate L_{A,chi,P}(s) through
///
///   L_{A,chi,P}(s) = sum_{l=0}^{N} [sum_j c_l(f_j(s))] L_{A,chi}(d s - (d-1) + l)
///                  + sum_{n>=A} chi(n) n^{-(d s - (d-1) + N + 1)} sum_j rho_N(1/n; f_j(s)),
///
/// where f_j(s) has s in slot j and s - 1 elsewhere and a_1..a_d are the
/// roots of the monic polynomial P / leading_coeff.
struct ContinuationPlan {
  PeriodicFunction chi;
  std::vector<Complex> roots;
  Real leading_coeff = 1;
  std::vector<Complex> coeffs;  // P itself, lowest degree first
  unsigned offset_a = 1;
  unsigned taylor_order = 0;
  Real tail_epsilon = 1e-13L;
  std::size_t tail_max_terms = 10'000'000;

  std::size_t degree() const { return roots.size(); }
};

/// N = d (ceil(max(0, 2 - Re s)) + 2).
unsigned default_taylor_order(std::size_t degree, Complex s);

/// Smallest A >= max(1, 2 max|a_j|) with Re P(A) > 0.
unsigned default_offset(std::span<const Complex> roots, std::span<const Complex> coeffs);

/// Plan from explicit roots of P / leading. Throws DomainError when an
/// explicit offset or order violates the plan invariants for this s.
ContinuationPlan make_plan(const PeriodicFunction& chi, std::span<const Complex> roots, Real leading, Complex s,
                           const PlanOptions& options = {});

/// Plan from exact coefficients; the roots come from Aberth-Ehrlich.
/// Throws InvalidPolynomial for degree < 1 or a non-positive leading
/// coefficient.
ContinuationPlan make_plan(const PeriodicFunction& chi, const QPoly& poly, Complex s, const PlanOptions& options = {});

/// L_{A,chi,P}(s) for the plan's offset A.
///
/// Throws DomainError if Re s <= 2 - (N+1)/d, PoleError when chi does not
/// sum to zero and some shifted argument d s - (d-1) + l equals 1, and
/// BudgetExceeded if the remainder series needs more than tail_max_terms.
Complex continuation_eval(const ContinuationPlan& plan, Complex s);

/// sum_{from <= n < to} chi(n) P'(n) / P(n)^s with principal powers.
Complex prefix_sum(const PeriodicFunction& chi, std::span<const Complex> coeffs, unsigned from, unsigned to,
                   Complex s);

/// The full series L_{chi,P}(s) = L_{1,chi,P}(s): continuation_eval plus the
/// finite prefix n < A.
Complex evaluate_l(const ContinuationPlan& plan, Complex s);

/// Plain partial summation of sum_{n>=A} chi(n) P'(n) / P(n)^s for
/// Re s > 1 + margin, stopped once the estimated tail is below epsilon.
/// For zero-sum chi the tail estimate uses summation by parts.
///
/// Throws ConvergenceError for Re s <= 1 + margin, BudgetExceeded when
/// max_terms is reached first.
Complex direct_sum(const PeriodicFunction& chi, std::span<const Complex> coeffs, unsigned offset_a, Complex s,
                   Real epsilon, std::size_t max_terms = 50'000'000, Real margin = 0.1L);

std::vector<Complex> to_complex_coeffs(const QPoly& poly);

}  // namespace chipoly
