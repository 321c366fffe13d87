#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chipoly/rational.hpp"

namespace chipoly {

/// Rational-valued periodic function chi on the positive integers,
/// given by one period chi(1), ..., chi(N).
class PeriodicFunction {
 public:
  /// Throws LengthMismatch unless values.size() == period, DomainError if
  /// period is 0.
  PeriodicFunction(std::size_t period, std::vector<Rational> values, std::string name = {});

  std::size_t period() const { return values_.size(); }
  std::span<const Rational> values() const { return values_; }
  bool zero_sum() const { return zero_sum_; }
  /// Short label used in reports ("chi3", or the table form).
  const std::string& name() const { return name_; }

  /// chi(n) for n >= 1; DomainError otherwise.
  const Rational& operator()(std::int64_t n) const;
  /// Same value as a long double, for the numeric engine.
  long double real_value(std::int64_t n) const;

  friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<long double> real_values_;
  bool zero_sum_ = false;
  std::string name_;
};

PeriodicFunction chi_from_table(std::size_t period, std::vector<Rational> values);
inline const Rational& chi_eval(const PeriodicFunction& chi, std::int64_t n) { return chi(n); }

/// The character mod 3 with values 1, -1, 0.
PeriodicFunction chi3();
/// The character mod 4 with values 1, 0, -1, 0.
PeriodicFunction chi4();
/// The constant function 1.
PeriodicFunction constant_one();

/// Parses `chi3`, `chi4`, `one`, or `period=N;values=v1,...,vN` where each
/// value is an integer or `a/b`. Throws ParseError or LengthMismatch.
PeriodicFunction parse_chi_spec(std::string_view spec);

/// The same function described with period k*N.
PeriodicFunction replicate(const PeriodicFunction& chi, std::size_t factor);

}  // namespace chipoly
