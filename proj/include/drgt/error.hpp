#pragma once

#include <stdexcept>
#include <string>

namespace drgt {

enum class Errc {
  InvalidArray,
  NonIntegral,
  MultiplicityNotIntegral,
  InconsistentSpectrum,
  AuxBoundViolation,
  DegenerateDenominator,
  PreconditionViolated,
  ZeroDenominator,
  A1Zero,
  NotTight,
  TrivialEigenvalue,
  ParamOutOfRange,
  NotDistanceRegular,
  NotAdjacent,
  FormulaMismatch,
  NotStronglyRegular,
  ParseError,
  Disconnected,
  Loop,
  MultiEdge,
  BudgetExceeded,
  Internal,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace drgt
