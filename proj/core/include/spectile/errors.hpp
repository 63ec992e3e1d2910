#pragma once

#include <stdexcept>
#include <string>

namespace spectile {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct SingularLatticeError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct UnsupportedDimensionError : Error {
  using Error::Error;
};

struct InvalidFormError : Error {
  using Error::Error;
};

struct NotSpectralError : Error {
  using Error::Error;
};

struct GroupMismatchError : Error {
  using Error::Error;
};

struct ZeroFunctionError : Error {
  using Error::Error;
};

}  // namespace spectile
