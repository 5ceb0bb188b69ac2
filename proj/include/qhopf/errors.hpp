#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two scalars over different cyclotomic fields were combined.
class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

/// An inverse was requested for a zero or non-unit value.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed the axioms it is supposed to satisfy.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same verdict disagreed. Always a bug.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (JSON schema violation, unknown reference).
class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhopf
