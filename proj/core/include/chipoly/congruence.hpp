#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chipoly/fpu.hpp"
#include "chipoly/periodic.hpp"
#include "chipoly/psi.hpp"
#include "chipoly/special_values.hpp"

namespace chipoly {

/// p_1, p_2, ... reduced into F_p[u]/(u^p - u), with the detected period.
struct CongruenceReport {
  std::uint64_t prime = 0;
  std::string chi_name;
  std::vector<FpuElement> terms;  // terms[i] is p_{i+1} mod p
  std::optional<std::size_t> period_detected;
  std::size_t preperiod = 1;
  std::size_t periods_checked = 0;

  /// True when terms[i] == terms[i + period] for every i >= preperiod.
  bool has_period(std::size_t period) const;
};

/// Number of terms a scan of this many periods computes: 1 + (periods + 1)(p - 1).
std::size_t congruence_term_count(std::uint64_t prime, std::size_t periods);

/// Smallest T with 1 <= T <= (len - preperiod) / 2 and terms[i] == terms[i+T]
/// for all i >= preperiod, if any.
std::optional<std::size_t> period_detect(std::span<const FpuElement> terms, std::size_t preperiod = 1);

/// Scans p_m(u) for X(X + u) modulo p. period_detected is the minimal
/// period when p - 1 is a period of the terms after the first, else empty.
/// The table must reach degree 2 * congruence_term_count(p, periods). Throws DomainError unless p > 3 is
/// prime, BadPrimeError when p divides a denominator.
CongruenceReport congruence_scan(const PeriodicFunction& chi, std::uint64_t prime, std::size_t periods,
                                 const PsiTable& table);

/// Same scan over an already computed family p_1, p_2, ...; only the first
/// congruence_term_count(p, periods) entries are used.
CongruenceReport congruence_scan(const std::string& chi_name, std::span<const FamilyPolynomial> family,
                                 std::uint64_t prime, std::size_t periods);

/// "t1, t2, ..." in display form.
std::string display_list(std::span<const FpuElement> terms);

}  // namespace chipoly
