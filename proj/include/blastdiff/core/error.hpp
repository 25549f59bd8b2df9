#pragma once

#include <stdexcept>
#include <string>

namespace blastdiff {

/// Base of every error the library throws on a broken contract or bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data or configuration violates a documented constraint.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A file could not be read, written or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

/// Numerical training diverged (non-finite loss or parameters).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A cooperative deadline expired inside a long-running routine.
class TimeoutError : public Error {
public:
    using Error::Error;
};

}  // namespace blastdiff
