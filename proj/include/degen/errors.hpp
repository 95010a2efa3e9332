#pragma once

#include <stdexcept>
#include <string>

namespace degen {

// Base class for every error raised by the library. Callers that only care
// about "something in degen failed" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// d_out * d_in != 0 where a complex was expected.
class CompositionNonzero : public Error {
 public:
  using Error::Error;
};

class ZeroValuation : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

// Raised when bounded relation search cannot separate genuine relations from
// congruences at the working precision. The remedy is a larger precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InputInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace degen
