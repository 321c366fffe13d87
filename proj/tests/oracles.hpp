#pragma once

// Independent reference computations shared by the test binaries. Nothing
// here calls the series engine; values come from classical recurrences or
// were computed separately and frozen.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <chipoly/numeric.hpp>
#include <chipoly/periodic.hpp>
#include <chipoly/polynomial.hpp>
#include <chipoly/rational.hpp>

namespace oracle {

using chipoly::QPoly;
using chipoly::Rational;

inline Rational q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

// B_m(1) for m = 0..20 (B_1 = +1/2).
inline const std::vector<Rational>& bernoulli_plus_table() {
  static const std::vector<Rational> table = qs({"1", "1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0",
                                                 "5/66", "0", "-691/2730", "0", "7/6", "0", "-3617/510", "0",
                                                 "43867/798", "0", "-174611/330"});
  return table;
}

// B_0..B_n (B_1 = -1/2) from sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_recurrence(unsigned n) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += chipoly::binomial(m + 1, k) * b[k];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

// B_m(x) = sum_k C(m, k) B_k x^{m-k}.
inline Rational bernoulli_polynomial(unsigned m, const Rational& x, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (unsigned k = 0; k <= m; ++k) acc += chipoly::binomial(m, k) * b[k] * x.pow(m - k);
  return acc;
}

// Psi_chi(X^m) = N^{m-1} sum_{a=1}^{N} chi(a) B_m(a/N), from the Bernoulli
// polynomial generating function.
inline Rational psi_moment_via_bernoulli(const chipoly::PeriodicFunction& chi, unsigned m) {
  const auto b = bernoulli_recurrence(m);
  const auto n = static_cast<long>(chi.period());
  Rational acc = 0;
  for (long a = 1; a <= n; ++a) acc += chi(a) * bernoulli_polynomial(m, Rational(a) / Rational(n), b);
  return Rational(n).pow(m) / Rational(n) * acc;
}

// Psi_3(X^m), m = 0..13.
inline const std::vector<Rational>& chi3_moments() {
  static const std::vector<Rational> table =
      qs({"0", "-1/3", "0", "2/3", "0", "-10/3", "0", "98/3", "0", "-1618/3", "0", "40634/3", "0", "-1445626/3"});
  return table;
}

// Psi_4(X^m), m = 0..9.
inline const std::vector<Rational>& chi4_moments() {
  static const std::vector<Rational> table = qs({"0", "-1/2", "0", "3/2", "0", "-25/2", "0", "427/2", "0", "-12465/2"});
  return table;
}

// p_1..p_7 for X(X+u) exactly as the published list prints them. The
// definitions give the negatives of these.
inline std::vector<QPoly> printed_family() {
  return {
      QPoly(qs({"0", "1/3"})),
      QPoly(qs({"0", "-2/3"})),
      QPoly(qs({"0", "10/3", "0", "-2/9"})),
      QPoly(qs({"0", "-98/3", "0", "10/3"})),
      QPoly(qs({"0", "1618/3", "0", "-196/3", "0", "2/3"})),
      QPoly(qs({"0", "-40634/3", "0", "16180/9", "0", "-98/3"})),
      QPoly(qs({"0", "1445626/3", "0", "-203170/3", "0", "1618", "0", "-14/3"})),
  };
}

// Published term lists of p_m mod p for chi3, starting at m = 1.
inline std::vector<std::string> printed_table(std::uint64_t p) {
  if (p == 5) return {"3u", "4u", "3u^3", "u", "2u^3", "4u"};
  if (p == 7) return {"2u", "3u", "u^3 + 6u", "6u^3", "4u^5 + 2u", "2u^3 + 2u", "6u^5 + 3u^3", "3u"};
  if (p == 11) {
    return {"7u",
            "8u",
            "10u^3 + 4u",
            "4u^3 + 7u",
            "3u^5 + 3u^3 + 7u",
            "7u^5 + 5u^3",
            "u^7 + 10u^5 + 9u",
            "7u^7 + 8u^3 + u",
            "2u^9 + 5u^5 + 2u^3 + 6u",
            "9u^7 + u^5 + 6u^3 + 5u",
            "u^9 + 8u^7 + 10u^5 + 9u^3",
            "8u"};
  }
  return {};
}

// Modular inverse by exhaustive search.
inline std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if ((a % p) * x % p == 1) return x;
  }
  return 0;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

inline QPoly random_poly(std::mt19937_64& rng, int degree, long range = 9, long max_den = 5) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_rational(rng, range, max_den));
  return QPoly(std::move(c));
}

// Random rational-valued periodic function with zero sum over a period.
inline chipoly::PeriodicFunction random_zero_sum_chi(std::mt19937_64& rng, std::size_t max_period = 6) {
  std::uniform_int_distribution<std::size_t> period_dist(2, max_period);
  const std::size_t period = period_dist(rng);
  std::vector<Rational> values;
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < period; ++k) {
    values.push_back(random_rational(rng, 4, 3));
    total += values.back();
  }
  values.push_back(-total);
  return chipoly::chi_from_table(period, std::move(values));
}

// sum_{n=1}^{terms} chi(n) / n^s, plain summation in long double.
inline chipoly::Complex naive_dirichlet(const chipoly::PeriodicFunction& chi, chipoly::Complex s, long terms) {
  chipoly::Complex acc = 0;
  for (long n = terms; n >= 1; --n) {
    acc += chi.real_value(n) * std::exp(-s * std::log(static_cast<chipoly::Real>(n)));
  }
  return acc;
}

}  // namespace oracle
