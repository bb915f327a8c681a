#pragma once

#include <stdexcept>
#include <string>

namespace coprime {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad family parameters (n too small, even where odd is needed, ...)
struct ParameterOutOfRange : Error {
  using Error::Error;
};

// a named construction was requested but its primality/residue hypothesis fails
struct HypothesisViolated : Error {
  using Error::Error;
};

// no construction applies; a coverage gap, reported rather than aborted on
struct ConstructionUnavailable : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct InfeasibleAtCap : Error {
  using Error::Error;
};

struct MissingVertex : Error {
  using Error::Error;
};

}  // namespace coprime
