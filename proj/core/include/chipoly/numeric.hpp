#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "chipoly/periodic.hpp"

namespace chipoly {

// The numeric engine runs in x87 extended precision. Special values at
// negative integers are sums of terms several orders of magnitude larger
// than the result, and double leaves too few digits for 1e-8 agreement.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

/// x^s = exp(s log x) for real x > 0.
Complex real_pow(Real x, Complex s);

/// Complex Gamma function (Stirling series after an upward shift,
/// reflection for Re z < 1/2).
Complex complex_gamma(Complex z);

/// B_{2j} / (2j)! for j = 0 .. count-1, from the exact Bernoulli recurrence.
const std::vector<Real>& even_bernoulli_over_factorial(std::size_t count);

/// Hurwitz zeta(s, a) = sum_{n>=0} (n + a)^{-s}, continued to s != 1, by
/// Euler-Maclaurin summation. Requires 0 < a <= 1; throws PoleError at s = 1.
/// Non-positive integers use the terminating expansion -B_{n+1}(a)/(n+1).
/// Elsewhere with Re s < 0 the directly summed head cancels, costing about
/// (K + a)^{1 - Re s} ulps for a cutoff K ~ |s|/pi; l_chi_numeric avoids this
/// region through the functional equation.
Complex hurwitz_zeta(Complex s, Real a);

/// L_chi(s) = N^{-s} sum_{a=1}^{N} chi(a) zeta(s, a/N), continued to C.
///
/// For zero-sum chi the pole terms are grouped before evaluation, so s = 1
/// is a regular point; otherwise s = 1 throws PoleError. For Re s < -1/2
/// the Hurwitz functional equation at rational parameters is used.
Complex l_chi_numeric(const PeriodicFunction& chi, Complex s);

}  // namespace chipoly
