#pragma once

#include <span>
#include <vector>

#include "chipoly/numeric.hpp"

namespace chipoly {

/// Horner evaluation of sum_k coeffs[k] z^k.
Complex evaluate_poly(std::span<const Complex> coeffs, Complex z);

/// Coefficients (lowest degree first) of lead * prod_j (X - roots[j]).
std::vector<Complex> poly_from_roots(std::span<const Complex> roots, Complex lead = 1);

/// All complex roots of the polynomial with the given coefficients (lowest
/// degree first, non-zero leading coefficient) by Aberth-Ehrlich iteration
/// followed by a Newton polish. Every root satisfies
/// |P(a)| < 1e-12 * sum_k |c_k| |a|^k, or ConvergenceError is thrown.
std::vector<Complex> aberth_roots(std::span<const Complex> coeffs);

}  // namespace chipoly
