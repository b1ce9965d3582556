#pragma once

#include <stdexcept>
#include <string>

namespace logres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LOGRES_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// symcore
LOGRES_DEFINE_ERROR(NotDivisible);
LOGRES_DEFINE_ERROR(DivisionByZero);
LOGRES_DEFINE_ERROR(MissingAssignment);
LOGRES_DEFINE_ERROR(ParseError);

// monideal
LOGRES_DEFINE_ERROR(MixedVariableSets);
LOGRES_DEFINE_ERROR(NotSimpleShape);

// blowup
LOGRES_DEFINE_ERROR(CenterNotInChart);
LOGRES_DEFINE_ERROR(CodimensionOne);

// resolution
LOGRES_DEFINE_ERROR(InvalidSystem);
LOGRES_DEFINE_ERROR(NonTransverseSlice);
LOGRES_DEFINE_ERROR(NotSubsystem);

// logjet
LOGRES_DEFINE_ERROR(OutOfRange);
LOGRES_DEFINE_ERROR(NotResolved);

// logconn
LOGRES_DEFINE_ERROR(DivisibilityFailure);
LOGRES_DEFINE_ERROR(BasepointNotInStratum);
LOGRES_DEFINE_ERROR(DegreeMismatch);

// residues
LOGRES_DEFINE_ERROR(ComponentNotLogMarked);

// bounds
LOGRES_DEFINE_ERROR(NonIntegerB);

// shared precondition failures
LOGRES_DEFINE_ERROR(InvalidArgument);

#undef LOGRES_DEFINE_ERROR

}  // namespace logres
