#pragma once

#include <stdexcept>
#include <string>

namespace funcspan {

/// Raised for malformed or inconsistent configuration input (CLI exit 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a computation cannot proceed numerically, e.g. a singular
/// system solved without regularization (CLI exit 3).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised for filesystem failures (CLI exit 4).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace funcspan
