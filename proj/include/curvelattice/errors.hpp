#pragma once

#include <stdexcept>
#include <string>

namespace cl {

// Usage errors: malformed input the caller can fix by rephrasing the request.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : UsageError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Domain errors: well-formed input on which the mathematics does not apply.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(kind) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define CL_DOMAIN_ERROR(Name)                                   \
  class Name : public DomainError {                             \
   public:                                                      \
    explicit Name(const std::string& msg) : DomainError(#Name, msg) {} \
  };

CL_DOMAIN_ERROR(NotIsolated)
CL_DOMAIN_ERROR(IncompleteLocus)
CL_DOMAIN_ERROR(UnclassifiedPoint)
CL_DOMAIN_ERROR(NotApplicable)
CL_DOMAIN_ERROR(DegreeParity)
CL_DOMAIN_ERROR(DivisibilityFailure)
CL_DOMAIN_ERROR(Degenerate)
CL_DOMAIN_ERROR(NotMinimal)
CL_DOMAIN_ERROR(NotPositiveDefinite)
CL_DOMAIN_ERROR(PrereqFailed)
CL_DOMAIN_ERROR(ConventionMismatch)
CL_DOMAIN_ERROR(InvalidPoint)

#undef CL_DOMAIN_ERROR

}  // namespace cl
