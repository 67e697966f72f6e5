#ifndef GQ_COMMON_HPP
#define GQ_COMMON_HPP

#include <stdexcept>
#include <string>

namespace gq {

// Error taxonomy shared across the library. Subcommands map `verdict_false`
// style results to exit code 2 and these to exit code 1.
enum class Err {
  OutOfRangeId,
  DuplicatePointOnLine,
  NotAxiom3,
  NotPrime,
  TooLarge,
  NoIrreducibleForm,
  GcdViolation,
  EvenH,
  NoNucleus,
  SamePoint,
  ConcurrentLines,
  NotThick,
  BudgetExceeded,
  WrongBaseType,
  WrongOrderShape,
  NotOrdered,
  DegreeMismatch,
  IncompatibleTypes,
  NotIdeal,
  NotAHyperplane,
  NotClosedIn,
  NoRepresentative,
  NotFullGrid,
  NoRationalPoint,
  UnsupportedObject,
  NotInTower,
  NotAChain,
  DiagramDoesNotCommute,
  NotPrimeFactor,
  BadFlags,
  IOError,
};

class GqError : public std::runtime_error {
 public:
  GqError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw GqError(code, what); }

inline void require(bool cond, Err code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace gq

#endif
