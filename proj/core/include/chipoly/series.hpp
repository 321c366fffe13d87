#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chipoly/rational.hpp"

namespace chipoly {

/// Power series in t over the rationals, known exactly up to t^order.
///
/// Every result carries the precision it actually has: sums and products
/// take the smaller operand order, and division by a series of valuation v
/// loses v orders.
class TruncatedSeries {
 public:
  /// The zero series known up to t^order.
  explicit TruncatedSeries(std::size_t order);
  /// Missing coefficients are zero, extra ones are dropped.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  /// e^{k t} from the recurrence c_n = c_{n-1} k / n.
  static TruncatedSeries exp(const Rational& k, std::size_t order);
  /// The constant c.
  static TruncatedSeries constant(const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first non-zero coefficient; empty for the zero series.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Multiplication by t; the result is known to one more order.
  TruncatedSeries times_t() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Quotient q with q * den == num up to the quotient's order, which is
/// min(num.order(), den.order()) - valuation(den).
///
/// Throws DivisionByZeroSeries when den is zero and ValuationError when
/// valuation(num) < valuation(den), or when the operands are too short to
/// determine any quotient coefficient.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace chipoly
