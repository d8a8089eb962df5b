#pragma once

#include <stdexcept>
#include <string>

namespace liedeform {

// Every failure raised by the library derives from Error so callers can catch
// the whole family at once; the concrete type names the condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIEDEFORM_ERROR(Name)                                   \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

LIEDEFORM_ERROR(MissingVariable)
LIEDEFORM_ERROR(DegreeTooHigh)
LIEDEFORM_ERROR(IndexOutOfRange)
LIEDEFORM_ERROR(SingularMatrix)
LIEDEFORM_ERROR(DimensionMismatch)
LIEDEFORM_ERROR(UnknownAlgebra)
LIEDEFORM_ERROR(UnknownFamily)
LIEDEFORM_ERROR(UnresolvedBranch)
LIEDEFORM_ERROR(JacobiFailure)
LIEDEFORM_ERROR(NoSolution)
LIEDEFORM_ERROR(NonlinearResidual)
LIEDEFORM_ERROR(NegativeDeterminant)
LIEDEFORM_ERROR(BranchViolation)
LIEDEFORM_ERROR(ParseError)

#undef LIEDEFORM_ERROR

}  // namespace liedeform
