#pragma once

#include <stdexcept>
#include <string>

namespace lk {

enum class ErrorKind {
  DivisionByZero,
  MismatchedField,
  UnsupportedField,
  ShapeMismatch,
  NotMultiplicityFree,
  InvalidParameterArray,
  CaseConstraintViolated,
  InfeasibleParameters,
  DiameterTooSmall,
  EndpointOutOfRange,
  NotAdmissible,
  FreeParameterConstraintViolated,
  ZeroScale,
  ZeroTrace,
  DegenerateBasis,
  NotADescendent,
  MiddleSystemMismatch,
  HypothesisViolated,
  DenominatorVanishes,
  ConfigParse,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace lk
