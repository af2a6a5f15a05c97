#pragma once

#include <stdexcept>
#include <string>

namespace foamlink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or structurally malformed input (diagram text, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of an operation (zero class where an essential
/// one is required, malformed class length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown edge or crossing id.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A Reidemeister move whose local pattern is not present in the diagram.
class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

/// A traced state circle whose class cannot come from an embedded curve.
class UnrealizableEmbedding : public Error {
 public:
  using Error::Error;
};

/// Crossing count above the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Requested computation is not defined for the chosen theory.
class UnsupportedTheory : public Error {
 public:
  using Error::Error;
};

/// Internal consistency tripwire (a bridge produced something outside the
/// enumerated basis, a state inconsistent with incidences, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace foamlink
