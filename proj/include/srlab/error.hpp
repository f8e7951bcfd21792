#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

enum class ErrorKind {
  NotPrime,
  Reducible,
  DegreeMismatch,
  FieldMismatch,
  NotSubfield,
  InvalidBasis,
  NoSelfDualBasis,
  SearchExceeded,
  LengthMismatch,
  DimensionMismatch,
  EmptyCode,
  NotCoprime,
  BadDelta,
  NoNontrivialCoset,
  NotDivisor,
  ProfileInvalid,
  ProfileMismatch,
  NonUniformProfile,
  DistanceExceedsLength,
  NotSelfDual,
  NotF4,
  ParseError,
  UnknownTable,
  MethodUnavailable,
  Unsupported,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace srlab
