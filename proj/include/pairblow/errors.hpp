#pragma once

#include <stdexcept>
#include <string>

namespace pairblow {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PAIRBLOW_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PAIRBLOW_DEFINE_ERROR(ParseError);
PAIRBLOW_DEFINE_ERROR(DivisionByZero);
PAIRBLOW_DEFINE_ERROR(NonExactDivision);
PAIRBLOW_DEFINE_ERROR(InvalidModel);
PAIRBLOW_DEFINE_ERROR(UnknownGeometry);
PAIRBLOW_DEFINE_ERROR(InconsistentConstraints);
PAIRBLOW_DEFINE_ERROR(UnsupportedCenter);
PAIRBLOW_DEFINE_ERROR(InvalidGate);
PAIRBLOW_DEFINE_ERROR(DominanceFails);
PAIRBLOW_DEFINE_ERROR(UnsupportedInsertionSide);
PAIRBLOW_DEFINE_ERROR(NoCommonFactor);
PAIRBLOW_DEFINE_ERROR(MissingOracle);
PAIRBLOW_DEFINE_ERROR(InvalidConfig);

#undef PAIRBLOW_DEFINE_ERROR

}  // namespace pairblow
