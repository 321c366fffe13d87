#include "chipoly/psi.hpp"

#include "chipoly/errors.hpp"
#include "chipoly/series.hpp"

namespace chipoly {

namespace {

void require_degree(const PsiTable& table, int degree) {
  if (degree > static_cast<int>(table.max_degree())) {
    throw DegreeOverflow("polynomial of degree " + std::to_string(degree) + " exceeds the Psi table degree " +
                         std::to_string(table.max_degree()));
  }
}

}  // namespace

PsiTable::PsiTable(PeriodicFunction chi, std::vector<Rational> moments)
    : chi_(std::move(chi)), moments_(std::move(moments)) {
  if (moments_.empty()) throw DomainError("a Psi table holds at least the moment of degree 0");
}

PsiTable psi_table(const PeriodicFunction& chi, std::size_t max_degree) {
  // Both sides have valuation >= 1, so one extra order is enough for the
  // quotient to be known up to t^max_degree.
  const std::size_t order = max_degree + 1;
  const auto period = static_cast<long>(chi.period());

  TruncatedSeries numerator(order - 1);
  for (long n = 1; n <= period; ++n) {
    if (chi(n).is_zero()) continue;
    numerator += chi(n) * TruncatedSeries::exp(n, order - 1);
  }
  const TruncatedSeries num = numerator.times_t();
  const TruncatedSeries den = TruncatedSeries::constant(1, order) - TruncatedSeries::exp(period, order);

  const TruncatedSeries quotient = series_divide(num, den);
  std::vector<Rational> moments(max_degree + 1);
  Rational fact = 1;
  for (std::size_t m = 0; m <= max_degree; ++m) {
    if (m > 0) fact *= Rational(m);
    moments[m] = -(fact * quotient[m]);
  }
  return PsiTable(chi, std::move(moments));
}

Rational psi_apply(const PsiTable& table, const QPoly& q) {
  require_degree(table, q.degree());
  Rational acc;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k].is_zero() || table.moment(k).is_zero()) continue;
    acc += q[k] * table.moment(k);
  }
  return acc;
}

QPoly psi_apply(const PsiTable& table, const QuPoly& q) {
  require_degree(table, q.degree());
  QPoly acc;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (table.moment(k).is_zero()) continue;
    acc += table.moment(k) * q[k];
  }
  return acc;
}

bool check_shift_identity(const PsiTable& table, const QPoly& e) {
  const auto period = static_cast<long>(table.chi().period());
  const Rational lhs = psi_apply(table, taylor_shift(e, Rational(period))) - psi_apply(table, e);
  const QPoly de = derivative(e);
  Rational rhs;
  for (long n = 1; n <= period; ++n) rhs += table.chi()(n) * evaluate(de, Rational(n));
  return lhs == rhs;
}

}  // namespace chipoly
