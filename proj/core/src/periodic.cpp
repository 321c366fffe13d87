#include "chipoly/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "chipoly/errors.hpp"

namespace chipoly {

namespace {

std::string table_name(const std::vector<Rational>& values) {
  std::string out = "period=" + std::to_string(values.size()) + ";values=";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += values[i].to_string();
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::size_t period, std::vector<Rational> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
  if (period == 0) throw DomainError("period must be at least 1");
  if (values_.size() != period) {
    throw LengthMismatch("period " + std::to_string(period) + " but " + std::to_string(values_.size()) +
                         " values");
  }
  Rational sum;
  real_values_.reserve(values_.size());
  for (const auto& v : values_) {
    sum += v;
    real_values_.push_back(v.to_long_double());
  }
  zero_sum_ = sum.is_zero();
  if (name_.empty()) name_ = table_name(values_);
}

const Rational& PeriodicFunction::operator()(std::int64_t n) const {
  if (n < 1) throw DomainError("periodic functions are defined on n >= 1, got " + std::to_string(n));
  return values_[static_cast<std::size_t>(n - 1) % values_.size()];
}

long double PeriodicFunction::real_value(std::int64_t n) const {
  if (n < 1) throw DomainError("periodic functions are defined on n >= 1, got " + std::to_string(n));
  return real_values_[static_cast<std::size_t>(n - 1) % real_values_.size()];
}

PeriodicFunction chi_from_table(std::size_t period, std::vector<Rational> values) {
  return PeriodicFunction(period, std::move(values));
}

PeriodicFunction chi3() { return PeriodicFunction(3, {1, -1, 0}, "chi3"); }
PeriodicFunction chi4() { return PeriodicFunction(4, {1, 0, -1, 0}, "chi4"); }
PeriodicFunction constant_one() { return PeriodicFunction(1, {1}, "one"); }

PeriodicFunction parse_chi_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec == "chi3") return chi3();
  if (spec == "chi4") return chi4();
  if (spec == "one") return constant_one();

  std::optional<std::size_t> period;
  std::optional<std::vector<Rational>> values;
  for (auto field : split(spec, ';')) {
    field = trim(field);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("malformed chi spec field '" + std::string(field) + "'");
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "period") {
      const Rational n = Rational::parse(value);
      if (!n.is_integer() || n.sign() <= 0) throw ParseError("period must be a positive integer");
      period = n.numerator().get_ui();
    } else if (key == "values") {
      std::vector<Rational> parsed;
      for (auto v : split(value, ',')) parsed.push_back(Rational::parse(v));
      values = std::move(parsed);
    } else {
      throw ParseError("unknown chi spec key '" + std::string(key) + "'");
    }
  }
  if (!period || !values) throw ParseError("chi spec needs both period= and values=");
  return PeriodicFunction(*period, std::move(*values));
}

PeriodicFunction replicate(const PeriodicFunction& chi, std::size_t factor) {
  if (factor == 0) throw DomainError("replication factor must be positive");
  std::vector<Rational> values;
  values.reserve(chi.period() * factor);
  for (std::size_t k = 0; k < factor; ++k) values.insert(values.end(), chi.values().begin(), chi.values().end());
  const std::size_t period = values.size();
  return PeriodicFunction(period, std::move(values));
}

}  // namespace chipoly
