#include "parse.hpp"

#include <cctype>
#include <cstdlib>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <chipoly/errors.hpp>

namespace chipoly::cli {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Real parse_real(std::string_view text, std::string_view whole) {
  const std::string owned(trim(text));
  if (owned.empty()) throw ParseError("missing number in '" + std::string(whole) + "'");
  char* end = nullptr;
  const Real value = std::strtold(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) throw ParseError("bad number in '" + std::string(whole) + "'");
  return value;
}

unsigned long parse_unsigned(std::string_view text, std::string_view whole) {
  text = trim(text);
  unsigned long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected a non-negative integer in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

QPoly parse_poly_spec(std::string_view text) {
  std::vector<Rational> coeffs;
  for (const auto part : split(text, ',')) {
    if (part.empty()) throw ParseError("empty coefficient in polynomial '" + std::string(text) + "'");
    coeffs.push_back(Rational::parse(part));
  }
  return QPoly(std::move(coeffs));
}

Complex parse_complex(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty complex number");
  if (body.back() != 'i') return {parse_real(body, text), 0};

  const std::string_view head = body.substr(0, body.size() - 1);
  // The real/imaginary split is the last sign that is not an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] != 'e' && head[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view real_text = split_at == std::string_view::npos ? std::string_view{} : head.substr(0, split_at);
  std::string_view imag_text = split_at == std::string_view::npos ? head : head.substr(split_at);
  Real imag = 0;
  if (imag_text.empty() || imag_text == "+") {
    imag = 1;
  } else if (imag_text == "-") {
    imag = -1;
  } else {
    if (imag_text.front() == '+') imag_text.remove_prefix(1);
    imag = parse_real(imag_text, text);
  }
  const Real real = real_text.empty() ? 0 : parse_real(real_text, text);
  return {real, imag};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (const auto part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::pair<unsigned, unsigned> parse_m_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("expected a range a..b, got '" + std::string(text) + "'");
  const auto lo = parse_unsigned(text.substr(0, dots), text);
  const auto hi = parse_unsigned(text.substr(dots + 2), text);
  if (lo < 1 || lo > hi) throw ParseError("range must satisfy 1 <= a <= b, got '" + std::string(text) + "'");
  return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

std::vector<unsigned long> parse_unsigned_list(std::string_view text) {
  std::vector<unsigned long> out;
  for (const auto part : split(text, ',')) out.push_back(parse_unsigned(part, text));
  return out;
}

std::string format_poly(const QPoly& poly, std::string_view variable) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (int k = poly.degree(); k >= 0; --k) {
    const Rational& c = poly[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational size = c.abs();
    const bool unit = size == Rational(1);
    if (k == 0 || !unit) out += size.to_string();
    if (k > 0) {
      if (!unit) out += " ";
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string format_real(Real x) {
  char buffer[64];
  const auto value = static_cast<double>(x);
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

}  // namespace chipoly::cli
