#pragma once

#include <stdexcept>
#include <string>

namespace omlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input shape problems.
struct DimensionError : Error {
  using Error::Error;
};
struct NotFinite : Error {
  using Error::Error;
};
struct OddDimension : DimensionError {
  using DimensionError::DimensionError;
};

// Kernel contract violations.
struct NotHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct NegativeSpectrum : Error {
  using Error::Error;
};
struct NegativeEntry : Error {
  using Error::Error;
};

// Block operation contract violations.
struct NonpositiveScale : Error {
  using Error::Error;
};
struct NotPSDInput : Error {
  using Error::Error;
};

// Catalog / search lookup problems.
struct UnknownCheck : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};
struct InvalidFunctionPair : Error {
  using Error::Error;
};

// Malformed JSON input (missing field, wrong type, bad shape).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace omlab
