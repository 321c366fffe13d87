#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <chipoly/numeric.hpp>
#include <chipoly/polynomial.hpp>

namespace chipoly::cli {

/// "c0,c1,...,cd" (lowest degree first; integers or a/b) as a polynomial.
QPoly parse_poly_spec(std::string_view text);

/// "a", "bi", "a+bi", "a-bi", "i", "-2.5e-1+3i".
Complex parse_complex(std::string_view text);

/// Comma separated list of complex numbers.
std::vector<Complex> parse_complex_list(std::string_view text);

/// "a..b" with 1 <= a <= b.
std::pair<unsigned, unsigned> parse_m_range(std::string_view text);

/// Comma separated list of positive integers.
std::vector<unsigned long> parse_unsigned_list(std::string_view text);

/// Polynomial in the given variable with the highest power first, e.g.
/// "2/9 u^3 - 10/3 u" or "X^2 + X". "0" for the zero polynomial.
std::string format_poly(const QPoly& poly, std::string_view variable);

/// Shortest round-trip decimal text of a long double (as a double).
std::string format_real(Real x);

}  // namespace chipoly::cli
