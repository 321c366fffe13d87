#include "chipoly/series.hpp"

#include <algorithm>

#include "chipoly/errors.hpp"

namespace chipoly {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::exp(const Rational& k, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = coeffs[n - 1] * k / Rational(n);
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::times_t() const {
  std::vector<Rational> shifted;
  shifted.reserve(coeffs_.size() + 1);
  shifted.emplace_back(0);
  shifted.insert(shifted.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(order() + 1, std::move(shifted));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(order, std::move(out));
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
  const auto den_val = den.valuation();
  if (!den_val) throw DivisionByZeroSeries("division by the zero series");
  const std::size_t shift = *den_val;
  const std::size_t common = std::min(num.order(), den.order());
  if (common < shift) {
    throw ValuationError("operands too short: divisor valuation exceeds the known order");
  }
  if (const auto num_val = num.valuation(); num_val && *num_val < shift) {
    throw ValuationError("valuation of the dividend is below that of the divisor");
  }

  const std::size_t order = common - shift;
  const Rational lead_inverse = den[shift].inverse();
  std::vector<Rational> q(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num[k + shift];
    for (std::size_t j = 0; j < k; ++j) {
      if (q[j].is_zero()) continue;
      acc -= q[j] * den[k - j + shift];
    }
    q[k] = acc * lead_inverse;
  }
  return TruncatedSeries(order, std::move(q));
}

}  // namespace chipoly
