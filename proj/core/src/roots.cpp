#include "chipoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

constexpr int kMaxIterations = 500;

struct ValueAndSlope {
  Complex value;
  Complex slope;
};

ValueAndSlope evaluate_with_derivative(std::span<const Complex> coeffs, Complex z) {
  Complex value = 0;
  Complex slope = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    slope = slope * z + value;
    value = value * z + coeffs[k];
  }
  return {value, slope};
}

Real residual_scale(std::span<const Complex> coeffs, Complex z) {
  Real scale = 0;
  Real power = 1;
  const Real r = std::abs(z);
  for (const auto& c : coeffs) {
    scale += std::abs(c) * power;
    power *= r;
  }
  return scale;
}

}  // namespace

Complex evaluate_poly(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

std::vector<Complex> poly_from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> coeffs{lead};
  for (const auto& a : roots) {
    std::vector<Complex> next(coeffs.size() + 1, Complex(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= a * coeffs[k];
    }
    coeffs.swap(next);
  }
  return coeffs;
}

std::vector<Complex> aberth_roots(std::span<const Complex> coeffs) {
  if (coeffs.empty() || coeffs.back() == Complex(0)) throw DomainError("leading coefficient must be non-zero");
  std::vector<Complex> roots;

  // Zero roots are split off exactly.
  std::size_t low = 0;
  while (low + 1 < coeffs.size() && coeffs[low] == Complex(0)) {
    roots.emplace_back(0);
    ++low;
  }
  const std::span<const Complex> reduced = coeffs.subspan(low);
  const std::size_t degree = reduced.size() - 1;
  if (degree == 0) return roots;

  // Start on a circle whose radius bounds every root modulus from above.
  Real radius = 0;
  for (std::size_t k = 0; k < degree; ++k) {
    const Real ratio = std::abs(reduced[k] / reduced[degree]);
    radius = std::max(radius, std::pow(ratio, 1.0L / static_cast<Real>(degree - k)));
  }
  std::vector<Complex> z(degree);
  for (std::size_t j = 0; j < degree; ++j) {
    const Real angle = 2 * kPi * static_cast<Real>(j) / static_cast<Real>(degree) + 0.7L;
    z[j] = std::polar(radius, angle);
  }

  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    converged = true;
    for (std::size_t j = 0; j < degree; ++j) {
      const auto [value, slope] = evaluate_with_derivative(reduced, z[j]);
      if (value == Complex(0)) continue;
      const Complex ratio = value / slope;
      Complex repulsion = 0;
      for (std::size_t k = 0; k < degree; ++k) {
        if (k != j) repulsion += Real(1) / (z[j] - z[k]);
      }
      const Complex step = ratio / (Real(1) - ratio * repulsion);
      z[j] -= step;
      if (std::abs(step) > 64 * std::numeric_limits<Real>::epsilon() * std::max<Real>(1, std::abs(z[j]))) {
        converged = false;
      }
    }
  }

  for (auto& root : z) {
    for (int polish = 0; polish < 3; ++polish) {
      const auto [value, slope] = evaluate_with_derivative(reduced, root);
      if (slope == Complex(0) || value == Complex(0)) break;
      const Complex candidate = root - value / slope;
      if (std::abs(evaluate_poly(reduced, candidate)) >= std::abs(value)) break;
      root = candidate;
    }
    if (std::abs(evaluate_poly(reduced, root)) > 1e-12L * residual_scale(reduced, root)) {
      throw ConvergenceError("root finding did not reach the residual tolerance");
    }
    roots.push_back(root);
  }
  return roots;
}

}  // namespace chipoly
