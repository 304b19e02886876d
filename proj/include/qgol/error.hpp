#pragma once

#include <stdexcept>
#include <string>

namespace qgol {

/// Base class for every error raised by the simulator.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A flip term was requested for a site outside 3..L-2.
class InvalidFlipSite : public Error {
  public:
    using Error::Error;
};

/// The chain is shorter than the five sites a single term needs.
class LatticeTooSmall : public Error {
  public:
    using Error::Error;
};

/// A backend (dense vector, exact-matrix oracle, exhaustive scan) cannot
/// hold a problem of the requested size.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// A state failed a numerical sanity check (e.g. it is not normalized).
class DiagnosticsError : public Error {
  public:
    using Error::Error;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace qgol
