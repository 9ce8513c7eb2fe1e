#ifndef CECHKIT_ERRORS_HPP
#define CECHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cechkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IllDefinedMorphism : public Error {
 public:
  using Error::Error;
};

/// Structural problems in caller-provided data (covers, sheaves, documents).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation's precondition failed: a lift could not be solved, a
/// cochain is not a cocycle, local equations disagree, and so on.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace cechkit

#endif  // CECHKIT_ERRORS_HPP
