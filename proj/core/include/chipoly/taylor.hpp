#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chipoly/numeric.hpp"

namespace chipoly {

/// Generalized binomial coefficient binom(-s, k) = (-s)(-s-1)...(-s-k+1)/k!.
Complex binomial_neg(Complex s, std::size_t k);

/// c_l(s) = (-1)^l sum_{|alpha| = l} a^alpha prod_j binom(-s_j, alpha_j),
/// the coefficient of x^l in prod_j (1 - x a_j)^{-s_j}, by enumerating the
/// compositions alpha of l into d parts.
Complex taylor_coefficient(std::size_t ell, std::span<const Complex> roots, std::span<const Complex> svec);

/// c_0 .. c_{count-1} at once, as a product of d univariate binomial series.
std::vector<Complex> taylor_coefficients(std::size_t count, std::span<const Complex> roots,
                                         std::span<const Complex> svec);

/// 1 / (2 max_j |a_j|), or +infinity when every root is zero.
Real taylor_radius(std::span<const Complex> roots);

/// rho_N(x; s) defined by
///   prod_j (1 - x a_j)^{-s_j} = sum_{l<=N} c_l(s) x^l + x^{N+1} rho_N(x; s)
/// for 0 < |x| <= delta. Evaluated as the convergent tail
/// sum_{k>=0} c_{N+1+k}(s) x^k, which avoids the cancellation in
/// (product - partial sum) / x^{N+1} for small x.
///
/// Throws DomainError for |x| > delta and BudgetExceeded if the tail fails
/// to converge within the internal term budget.
Complex taylor_remainder(Real x, std::span<const Complex> roots, std::span<const Complex> svec, std::size_t order);

}  // namespace chipoly
