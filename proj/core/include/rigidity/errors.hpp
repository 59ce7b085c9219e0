#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RIGIDITY_DEFINE_ERROR(Name)                       \
  class Name : public Error {                             \
   public:                                                \
    explicit Name(const std::string& what) : Error(what) {} \
  };

RIGIDITY_DEFINE_ERROR(RankMismatch)
RIGIDITY_DEFINE_ERROR(UnsupportedSigma)
RIGIDITY_DEFINE_ERROR(InvalidKType)
RIGIDITY_DEFINE_ERROR(InvalidStep)
RIGIDITY_DEFINE_ERROR(NotAdjacent)
RIGIDITY_DEFINE_ERROR(InconsistentSystem)
RIGIDITY_DEFINE_ERROR(DomainError)
RIGIDITY_DEFINE_ERROR(QuadratureFailure)
RIGIDITY_DEFINE_ERROR(FitUnstable)
RIGIDITY_DEFINE_ERROR(ParityError)
RIGIDITY_DEFINE_ERROR(ZeroCovector)
RIGIDITY_DEFINE_ERROR(PreconditionViolation)
RIGIDITY_DEFINE_ERROR(Degenerate)

#undef RIGIDITY_DEFINE_ERROR

}  // namespace rigidity
