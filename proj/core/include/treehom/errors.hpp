#pragma once

#include <stdexcept>
#include <string>

namespace treehom {

// Error taxonomy. Each named failure mode of an operation gets its own type
// so callers (and the CLI exit-code mapping) can discriminate without
// parsing messages.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EqualEnds : Error {
  EqualEnds() : Error("tree ends coincide; meeting height is infinite") {}
};
struct PlaquetteInconsistent : Error {
  explicit PlaquetteInconsistent(const std::string& what) : Error(what) {}
};
struct Unreachable : Error {
  Unreachable() : Error("cells lie in different components of the region") {}
};
struct ZeroSlope : Error {
  ZeroSlope() : Error("configuration has zero slope; no supporting geodesic") {}
};
struct UnrealizableSlope : Error {
  explicit UnrealizableSlope(const std::string& what) : Error(what) {}
};
struct ConditionViolated : Error {
  explicit ConditionViolated(const std::string& what) : Error(what) {}
};
struct NotExtremum : Error {
  NotExtremum() : Error("site is not an extremum") {}
};
struct FixedSite : Error {
  FixedSite() : Error("site depth is fixed by the conditioning") {}
};
struct NotAnExcursion : Error {
  explicit NotAnExcursion(const std::string& what) : Error(what) {}
};
struct NotMinimum : Error {
  NotMinimum() : Error("site is not a local minimum") {}
};
struct BudgetExceeded : Error {
  BudgetExceeded() : Error("enumeration work budget exceeded") {}
};
struct EmptyBoundaryClass : Error {
  explicit EmptyBoundaryClass(const std::string& what) : Error(what) {}
};
struct EmptyConditionClass : Error {
  explicit EmptyConditionClass(const std::string& what) : Error(what) {}
};
struct InvalidBoundary : Error {
  explicit InvalidBoundary(const std::string& what) : Error(what) {}
};
struct Infeasible : Error {
  explicit Infeasible(const std::string& what) : Error(what) {}
};
struct IOError : Error {
  explicit IOError(const std::string& what) : Error(what) {}
};

}  // namespace treehom
