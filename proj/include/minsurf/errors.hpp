#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateRoots : Error {
  using Error::Error;
};
struct BranchPointOnInterior : Error {
  using Error::Error;
};
struct SeedInconsistent : Error {
  using Error::Error;
};
struct AtBranchPoint : Error {
  using Error::Error;
};
struct WrongCurve : Error {
  using Error::Error;
};
struct CurveNotSymmetric : Error {
  using Error::Error;
};
struct PrecisionNotReached : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotCoprime : Error {
  using Error::Error;
};
struct DegenerateAngle : Error {
  using Error::Error;
};
struct SingularBasis : Error {
  using Error::Error;
};
struct RangeViolation : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace minsurf
