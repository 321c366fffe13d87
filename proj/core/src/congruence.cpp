#include "chipoly/congruence.hpp"

#include "chipoly/errors.hpp"
#include "chipoly/ring.hpp"

namespace chipoly {

namespace {

void require_scan_prime(std::uint64_t prime, std::size_t periods) {
  if (prime <= 3 || !is_prime(prime)) {
    throw DomainError("congruence scans need a prime p > 3, got " + std::to_string(prime));
  }
  if (periods == 0) throw DomainError("at least one period must be scanned");
}

}  // namespace

bool CongruenceReport::has_period(std::size_t period) const {
  if (period == 0) return false;
  for (std::size_t i = preperiod; i + period < terms.size(); ++i) {
    if (!(terms[i] == terms[i + period])) return false;
  }
  return true;
}

std::size_t congruence_term_count(std::uint64_t prime, std::size_t periods) {
  return 1 + (periods + 1) * static_cast<std::size_t>(prime - 1);
}

std::optional<std::size_t> period_detect(std::span<const FpuElement> terms, std::size_t preperiod) {
  if (terms.size() <= preperiod) return std::nullopt;
  const std::size_t span = terms.size() - preperiod;
  for (std::size_t t = 1; 2 * t <= span; ++t) {
    bool matches = true;
    for (std::size_t i = preperiod; i + t < terms.size() && matches; ++i) matches = terms[i] == terms[i + t];
    if (matches) return t;
  }
  return std::nullopt;
}

CongruenceReport congruence_scan(const std::string& chi_name, std::span<const FamilyPolynomial> family,
                                 std::uint64_t prime, std::size_t periods) {
  require_scan_prime(prime, periods);
  const std::size_t count = congruence_term_count(prime, periods);
  if (family.size() < count) {
    throw DegreeOverflow("family has " + std::to_string(family.size()) + " terms, scan needs " +
                         std::to_string(count));
  }
  CongruenceReport report;
  report.prime = prime;
  report.chi_name = chi_name;
  report.periods_checked = periods;
  report.terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) report.terms.push_back(fpu_reduce(family[i].value, prime));
  // The minimal period is reported, but only when p - 1 itself is a period.
  if (report.has_period(static_cast<std::size_t>(prime - 1))) {
    report.period_detected = period_detect(report.terms, report.preperiod);
  }
  return report;
}

CongruenceReport congruence_scan(const PeriodicFunction& chi, std::uint64_t prime, std::size_t periods,
                                 const PsiTable& table) {
  require_scan_prime(prime, periods);
  const auto count = static_cast<unsigned>(congruence_term_count(prime, periods));
  const auto family = family_range(family_shape_x_x_plus_u(), count, table);
  return congruence_scan(chi.name(), family, prime, periods);
}

std::string display_list(std::span<const FpuElement> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_display(terms[i]);
  }
  return out;
}

}  // namespace chipoly
