#pragma once

#include <stdexcept>
#include <string>

namespace chancalc {

/// Base class for all library errors. `kind()` is stable machine-readable
/// text used by the CLI to pick exit codes and error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Malformed input: bad labels, bad weights, schema violations, cycles,
/// arity mismatches. CLI exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error("validation", message) {}
};

/// A query that cannot be answered on valid input. CLI exit code 2.
class InferenceError : public Error {
public:
    explicit InferenceError(const std::string& message)
        : Error("inference", message) {}
};

/// A causal quantity that is not identifiable from the given data
/// (a required conditional is undefined on a reachable row). CLI exit code 2.
class IdentifiabilityError : public Error {
public:
    explicit IdentifiabilityError(const std::string& message)
        : Error("identifiability", message) {}
};

/// A dense joint would exceed the configured entry bound. CLI exit code 2.
class BoundError : public Error {
public:
    explicit BoundError(const std::string& message)
        : Error("bound", message) {}
};

} // namespace chancalc
