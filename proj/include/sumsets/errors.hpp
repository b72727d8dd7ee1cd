#pragma once

#include <stdexcept>
#include <string>

namespace sumsets {

// Every failure raised by the library derives from Error. The category decides
// how the command-line front end maps it onto an exit code.
enum class ErrorCategory {
  InvalidInput,   // malformed or unsupported input
  ResourceCap,    // refusing an enumeration or search that exceeds a cap
  Verification,   // an internal invariant or guaranteed bound did not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define SUMSETS_DEFINE_ERROR(Name, Category)                                \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what)                                  \
        : Error(ErrorCategory::Category, #Name ": " + what) {}              \
  };

SUMSETS_DEFINE_ERROR(NotPrime, InvalidInput)
SUMSETS_DEFINE_ERROR(DimensionMismatch, InvalidInput)
SUMSETS_DEFINE_ERROR(DegreeTooHigh, InvalidInput)
SUMSETS_DEFINE_ERROR(ZeroMatrix, InvalidInput)
SUMSETS_DEFINE_ERROR(DependentInput, InvalidInput)
SUMSETS_DEFINE_ERROR(PreconditionFailed, InvalidInput)
SUMSETS_DEFINE_ERROR(ParseError, InvalidInput)
SUMSETS_DEFINE_ERROR(ValidationError, InvalidInput)
SUMSETS_DEFINE_ERROR(EnumerationTooLarge, ResourceCap)
SUMSETS_DEFINE_ERROR(SearchTooLarge, ResourceCap)
SUMSETS_DEFINE_ERROR(BoundViolated, Verification)

#undef SUMSETS_DEFINE_ERROR

}  // namespace sumsets
