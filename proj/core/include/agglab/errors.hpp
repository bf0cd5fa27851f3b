// Exception taxonomy shared by the whole library.  Everything derives from
// std::runtime_error (or std::invalid_argument / std::domain_error from the
// standard library) so callers can catch coarsely at the CLI boundary.
#pragma once

#include <stdexcept>
#include <string>

namespace agglab {

// Adaptive integration failed to reach the requested tolerances.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// An empirical routine was handed fewer observations than it requires
// (e.g. empirical scaling quantile with sample smaller than N).
class InsufficientSampleError : public std::runtime_error {
public:
    explicit InsufficientSampleError(const std::string& what) : std::runtime_error(what) {}
};

// A conditional-tail routine found fewer exceedances than its floor.
class InsufficientExceedancesError : public std::runtime_error {
public:
    explicit InsufficientExceedancesError(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate or invalid data where a statistic is undefined
// (e.g. Hill estimator on a constant block).
class InvalidSampleError : public std::runtime_error {
public:
    explicit InvalidSampleError(const std::string& what) : std::runtime_error(what) {}
};

// A simulation request exceeds the configured memory cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration text failed to parse or validate.  The message carries every
// line-numbered diagnostic found, one per line, never just the first.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace agglab
