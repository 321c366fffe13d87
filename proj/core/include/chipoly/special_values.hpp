#pragma once

#include <cstddef>
#include <vector>

#include "chipoly/periodic.hpp"
#include "chipoly/polynomial.hpp"
#include "chipoly/psi.hpp"

namespace chipoly {

/// Exact special value L_{A,chi,P}(1 - m), where
///   L_{A,chi,P}(s) = sum_{n >= A} chi(n) P'(n) / P(n)^s.
struct LValueRequest {
  PeriodicFunction chi;
  QPoly poly;
  unsigned offset_a = 1;
  unsigned m = 1;
};

/// p_m(u) = Psi_chi(shape^m) / m for a shape in X with coefficients in Q[u].
struct FamilyPolynomial {
  unsigned m = 0;
  QPoly value;
};

/// Rejects P with non-positive leading coefficient or with a root among the
/// positive integers up to max(A, Cauchy bound). Throws InvalidPolynomial.
void validate_l_polynomial(const QPoly& poly, unsigned offset_a);

/// sum_{n=from}^{to-1} chi(n) P'(n) P(n)^{m-1}.
Rational weighted_prefix(const PeriodicFunction& chi, const QPoly& poly, unsigned m, unsigned from, unsigned to);

/// L_{A,chi,P}(1 - m) = -Psi(P^m)/m - sum_{n<A} chi(n) P'(n) P(n)^{m-1}.
Rational l_negative(const LValueRequest& req, const PsiTable& table);

/// Checks L_{A1}(1-m) == L_{A2}(1-m) + sum_{A1 <= n < A2} chi(n) P'(n) P(n)^{m-1}.
bool a_offset_consistency(const PeriodicFunction& chi, const QPoly& poly, const PsiTable& table, unsigned m,
                          unsigned a1, unsigned a2);

/// Checks l_negative(c Q, m) == c^m l_negative(Q, m) for c > 0.
bool scaling_identity_check(const PeriodicFunction& chi, const QPoly& poly, const Rational& c, unsigned m,
                            const PsiTable& table);

/// X(X + u) = X^2 + u X.
QuPoly family_shape_x_x_plus_u();

/// p_m(u) for the shape X(X + u).
FamilyPolynomial family_pm(const PeriodicFunction& chi, unsigned m, const PsiTable& table);
/// p_m(u) for an arbitrary shape.
FamilyPolynomial family_pm(const QuPoly& shape, unsigned m, const PsiTable& table);

/// p_1 .. p_{m_max}, reusing each power of the shape for the next one.
std::vector<FamilyPolynomial> family_range(const QuPoly& shape, unsigned m_max, const PsiTable& table);

}  // namespace chipoly
