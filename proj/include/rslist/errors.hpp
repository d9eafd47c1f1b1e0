#pragma once

#include <stdexcept>
#include <string>

namespace rslist {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error {
  explicit NonPrimeCharacteristic(const std::string& what = "characteristic is not prime")
      : Error(what) {}
};

struct ReducibleModulus : Error {
  explicit ReducibleModulus(const std::string& what = "modulus is reducible")
      : Error(what) {}
};

struct FieldTooLarge : Error {
  explicit FieldTooLarge(const std::string& what = "field order exceeds 2^16")
      : Error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(what) {}
};

struct MixedFields : Error {
  explicit MixedFields(const std::string& what = "operands belong to different fields")
      : Error(what) {}
};

struct DuplicateNodes : Error {
  explicit DuplicateNodes(const std::string& what = "interpolation nodes are not distinct")
      : Error(what) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& what = "vector lengths do not match")
      : Error(what) {}
};

struct MessageDegreeTooHigh : Error {
  explicit MessageDegreeTooHigh(const std::string& what = "message degree is not below k")
      : Error(what) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& what = "operation undefined for the zero polynomial")
      : Error(what) {}
};

struct YDegreeOverflow : Error {
  explicit YDegreeOverflow(const std::string& what = "result would exceed the y-degree cap")
      : Error(what) {}
};

struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what = "malformed input")
      : Error(what) {}
};

struct UnexpectedZero : Error {
  explicit UnexpectedZero(const std::string& what = "generator vanished during reduction")
      : Error(what) {}
};

struct KTooSmall : Error {
  explicit KTooSmall(const std::string& what = "dimension k must be at least 2")
      : Error(what) {}
};

struct LOverrideBelowM : Error {
  explicit LOverrideBelowM(const std::string& what = "list size override is below the multiplicity")
      : Error(what) {}
};

struct TooManyErrors : Error {
  explicit TooManyErrors(const std::string& what = "error weight exceeds the unique decoding radius")
      : Error(what) {}
};

struct InstanceTooLarge : Error {
  explicit InstanceTooLarge(const std::string& what = "instance too large for exhaustive search")
      : Error(what) {}
};

}  // namespace rslist
