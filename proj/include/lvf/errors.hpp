#pragma once

#include <stdexcept>
#include <string>

namespace lvf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A product produced a monomial above the configured degree cap.
class DegreeCapExceeded : public Error {
public:
  using Error::Error;
};

/// The truncation margin is too small for an identity to be checked honestly.
class MarginViolation : public Error {
public:
  using Error::Error;
};

class EmptySafeWindow : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotDegreePreserving : public Error {
public:
  using Error::Error;
};

class CocycleFailure : public Error {
public:
  using Error::Error;
};

} // namespace lvf
