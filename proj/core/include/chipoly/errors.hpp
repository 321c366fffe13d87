#pragma once

#include <stdexcept>
#include <string>

namespace chipoly {

// Coarse classes used by the command-line front-end to pick an exit code.
enum class ErrorCategory { parse = 1, domain = 2, budget = 3 };

class Error : public std::runtime_error {
 public:
  Error(const char* name, ErrorCategory category, const std::string& message)
      : std::runtime_error(message), name_(name), category_(category) {}

  const char* name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  const char* name_;
  ErrorCategory category_;
};

#define CHIPOLY_DEFINE_ERROR(Type, Category)                        \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& message)                       \
        : Error(#Type, ErrorCategory::Category, message) {}         \
  }

CHIPOLY_DEFINE_ERROR(ParseError, parse);
CHIPOLY_DEFINE_ERROR(LengthMismatch, parse);
CHIPOLY_DEFINE_ERROR(DomainError, domain);
CHIPOLY_DEFINE_ERROR(DivisionByZeroSeries, domain);
CHIPOLY_DEFINE_ERROR(ValuationError, domain);
CHIPOLY_DEFINE_ERROR(BadPrimeError, domain);
CHIPOLY_DEFINE_ERROR(DegreeOverflow, domain);
CHIPOLY_DEFINE_ERROR(InvalidPolynomial, domain);
CHIPOLY_DEFINE_ERROR(PoleError, domain);
CHIPOLY_DEFINE_ERROR(ConvergenceError, domain);
CHIPOLY_DEFINE_ERROR(BudgetExceeded, budget);

#undef CHIPOLY_DEFINE_ERROR

}  // namespace chipoly
