#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chipoly/periodic.hpp"
#include "chipoly/polynomial.hpp"

namespace chipoly {

/// Moments Psi_chi(X^m), m = 0 .. max_degree, of the linear form attached
/// to a periodic function chi of period N by
///
///   t * sum_{n=1}^{N} chi(n) e^{n t} / (1 - e^{N t}) = - sum_m Psi_chi(X^m) t^m / m!
///
/// For chi = 1 these are the Bernoulli numbers B_m(1); in general
/// L_chi(1 - m) = -Psi_chi(X^m) / m.
class PsiTable {
 public:
  PsiTable(PeriodicFunction chi, std::vector<Rational> moments);

  const PeriodicFunction& chi() const { return chi_; }
  std::size_t max_degree() const { return moments_.size() - 1; }
  std::span<const Rational> moments() const { return moments_; }
  const Rational& moment(std::size_t m) const { return moments_.at(m); }

 private:
  PeriodicFunction chi_;
  std::vector<Rational> moments_;
};

/// Expands the generating identity as an exact truncated series division.
PsiTable psi_table(const PeriodicFunction& chi, std::size_t max_degree);

/// Psi_chi(q) by linearity. Throws DegreeOverflow if deg q > max_degree.
Rational psi_apply(const PsiTable& table, const QPoly& q);

/// Applies Psi_chi in X to a polynomial whose X-coefficients are
/// polynomials in u; the result is a polynomial in u.
QPoly psi_apply(const PsiTable& table, const QuPoly& q);

/// Checks Psi(E(N + X)) - Psi(E) == sum_{n=1}^{N} chi(n) E'(n) exactly.
bool check_shift_identity(const PsiTable& table, const QPoly& e);

}  // namespace chipoly
