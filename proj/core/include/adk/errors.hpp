#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adk {

/// Base class for domain errors: bad input, unmet preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or scan would exceed its configured bound.
class LimitError : public Error {
 public:
  LimitError(const std::string& what, std::int64_t cardinality, std::int64_t bound)
      : Error(what + ": cardinality " + std::to_string(cardinality) + " exceeds bound " +
              std::to_string(bound)),
        cardinality_(cardinality),
        bound_(bound) {}

  std::int64_t cardinality() const noexcept { return cardinality_; }
  std::int64_t bound() const noexcept { return bound_; }

 private:
  std::int64_t cardinality_;
  std::int64_t bound_;
};

/// The request is well-formed but outside what the constructive routines cover.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Exact division left a remainder. Inside MacWilliams transforms this means
/// the inputs do not belong together (or a bug), never rounding.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that holds by theory failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace adk
