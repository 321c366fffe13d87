#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "chipoly/errors.hpp"
#include "chipoly/rational.hpp"
#include "chipoly/ring.hpp"

namespace chipoly {

/// Dense univariate polynomial over a coefficient ring, lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and degree() == -1.
template <CoefficientRing R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(const R& constant) : coeffs_{constant} { trim(); }
  // Lets Polynomial<R> itself satisfy CoefficientRing (R(0), R(1)).
  explicit Polynomial(int constant) : Polynomial(R(constant)) {}

  static Polynomial monomial(const R& coefficient, std::size_t exponent) {
    if (coefficient == R(0)) return {};
    std::vector<R> coeffs(exponent + 1, R(0));
    coeffs[exponent] = coefficient;
    return Polynomial(std::move(coeffs));
  }
  static Polynomial variable() { return monomial(R(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const R& operator[](std::size_t k) const { return coeffs_[k]; }
  /// Coefficient of X^k, zero past the degree.
  R coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
  const R& leading() const { return coeffs_.back(); }
  std::span<const R> coefficients() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), R(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), R(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<R> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == R(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const R& scalar, Polynomial p) {
    for (auto& c : p.coeffs_) c = scalar * c;
    p.trim();
    return p;
  }

  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// Formal derivative.
template <CoefficientRing R>
Polynomial<R> derivative(const Polynomial<R>& p) {
  if (p.degree() < 1) return {};
  std::vector<R> out;
  out.reserve(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(R(static_cast<int>(k)) * p[k]);
  return Polynomial<R>(std::move(out));
}

/// Horner evaluation at a point of the coefficient ring.
template <CoefficientRing R>
R evaluate(const Polynomial<R>& p, const R& x) {
  R acc(0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// p(X + c), by Horner's scheme over polynomials.
template <CoefficientRing R>
Polynomial<R> taylor_shift(const Polynomial<R>& p, const R& c) {
  const Polynomial<R> x_plus_c{c, R(1)};
  Polynomial<R> acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x_plus_c + Polynomial<R>(p[k]);
  return acc;
}

/// p^m by binary exponentiation; p^0 is the constant 1.
template <CoefficientRing R>
Polynomial<R> pow(const Polynomial<R>& p, unsigned m) {
  Polynomial<R> result(R(1));
  Polynomial<R> base = p;
  while (m != 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m != 0) base = base * base;
  }
  return result;
}

using QPoly = Polynomial<Rational>;
/// Polynomials in X whose coefficients are polynomials in a parameter u.
using QuPoly = Polynomial<QPoly>;

}  // namespace chipoly
