#pragma once

#include <stdexcept>
#include <string>

namespace ansl {

// Base for all domain errors; `code()` is the stable machine-readable name
// used in CLI error output and tests.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define ANSL_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                \
  public:                                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {}           \
  }

ANSL_DEFINE_ERROR(NonPositiveB);
ANSL_DEFINE_ERROR(NormalizationViolation);
ANSL_DEFINE_ERROR(DegenerateBoundaryData);
ANSL_DEFINE_ERROR(SingularJetSystem);
ANSL_DEFINE_ERROR(InsufficientSmoothness);
ANSL_DEFINE_ERROR(StartoffTooDeep);
ANSL_DEFINE_ERROR(BlowupDetected);
ANSL_DEFINE_ERROR(StepRejected);
ANSL_DEFINE_ERROR(NonpositiveN);
ANSL_DEFINE_ERROR(DivisionHazard);
ANSL_DEFINE_ERROR(WindowOutOfRange);
ANSL_DEFINE_ERROR(DriftOutOfRange);
ANSL_DEFINE_ERROR(SolverSingular);
ANSL_DEFINE_ERROR(BoundaryConditionViolated);
ANSL_DEFINE_ERROR(ZeroSetTooSmall);
ANSL_DEFINE_ERROR(ProfileInvalid);
ANSL_DEFINE_ERROR(BadParameters);
ANSL_DEFINE_ERROR(ConfigError);

#undef ANSL_DEFINE_ERROR

} // namespace ansl
