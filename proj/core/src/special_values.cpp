#include "chipoly/special_values.hpp"

#include <algorithm>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

void require_matching_chi(const PeriodicFunction& chi, const PsiTable& table) {
  if (!(chi == table.chi())) throw DomainError("Psi table was built for a different periodic function");
}

}  // namespace

void validate_l_polynomial(const QPoly& poly, unsigned offset_a) {
  if (poly.degree() < 1) throw InvalidPolynomial("P must have degree >= 1");
  if (poly.leading().sign() <= 0) throw InvalidPolynomial("P must have a positive leading coefficient");
  if (offset_a < 1) throw InvalidPolynomial("offset A must be a positive integer");

  // Every root has modulus below 1 + max |a_k / a_d|.
  Rational bound;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) bound = std::max(bound, (poly[k] / poly.leading()).abs());
  bound += 1;
  const mpz_class floor_bound = bound.numerator() / bound.denominator();
  const unsigned long last = std::max<unsigned long>(offset_a, floor_bound.get_ui());
  for (unsigned long n = 1; n <= last; ++n) {
    if (evaluate(poly, Rational(n)).is_zero()) {
      throw InvalidPolynomial("P vanishes at the positive integer " + std::to_string(n));
    }
  }
}

Rational weighted_prefix(const PeriodicFunction& chi, const QPoly& poly, unsigned m, unsigned from, unsigned to) {
  if (m == 0) throw DomainError("m must be a positive integer");
  const QPoly dp = derivative(poly);
  Rational acc;
  for (unsigned n = std::max(from, 1U); n < to; ++n) {
    const Rational& c = chi(n);
    if (c.is_zero()) continue;
    const Rational x(n);
    acc += c * evaluate(dp, x) * evaluate(poly, x).pow(m - 1);
  }
  return acc;
}

Rational l_negative(const LValueRequest& req, const PsiTable& table) {
  if (req.m == 0) throw DomainError("m must be a positive integer");
  require_matching_chi(req.chi, table);
  validate_l_polynomial(req.poly, req.offset_a);
  const Rational main = -psi_apply(table, pow(req.poly, req.m)) / Rational(req.m);
  return main - weighted_prefix(req.chi, req.poly, req.m, 1, req.offset_a);
}

bool a_offset_consistency(const PeriodicFunction& chi, const QPoly& poly, const PsiTable& table, unsigned m,
                          unsigned a1, unsigned a2) {
  if (a1 > a2) throw DomainError("a_offset_consistency needs A1 <= A2");
  const Rational l1 = l_negative({chi, poly, a1, m}, table);
  const Rational l2 = l_negative({chi, poly, a2, m}, table);
  return l1 == l2 + weighted_prefix(chi, poly, m, a1, a2);
}

bool scaling_identity_check(const PeriodicFunction& chi, const QPoly& poly, const Rational& c, unsigned m,
                            const PsiTable& table) {
  if (c.sign() <= 0) throw DomainError("scaling constant must be positive");
  const Rational scaled = l_negative({chi, c * poly, 1, m}, table);
  const Rational base = l_negative({chi, poly, 1, m}, table);
  return scaled == c.pow(m) * base;
}

QuPoly family_shape_x_x_plus_u() {
  const QPoly u = QPoly::variable();
  return QuPoly{QPoly(), u, QPoly(1)};
}

FamilyPolynomial family_pm(const PeriodicFunction& chi, unsigned m, const PsiTable& table) {
  require_matching_chi(chi, table);
  return family_pm(family_shape_x_x_plus_u(), m, table);
}

FamilyPolynomial family_pm(const QuPoly& shape, unsigned m, const PsiTable& table) {
  if (m == 0) throw DomainError("m must be a positive integer");
  const QPoly value = psi_apply(table, pow(shape, m));
  return {m, Rational(1, m) * value};
}

std::vector<FamilyPolynomial> family_range(const QuPoly& shape, unsigned m_max, const PsiTable& table) {
  if (shape.degree() > 0 && static_cast<std::size_t>(shape.degree()) * m_max > table.max_degree()) {
    throw DegreeOverflow("Psi table degree " + std::to_string(table.max_degree()) + " is too small for m = " +
                         std::to_string(m_max));
  }
  std::vector<FamilyPolynomial> out;
  out.reserve(m_max);
  QuPoly power(QPoly(1));
  for (unsigned m = 1; m <= m_max; ++m) {
    power = power * shape;
    out.push_back({m, Rational(1, m) * psi_apply(table, power)});
  }
  return out;
}

}  // namespace chipoly
