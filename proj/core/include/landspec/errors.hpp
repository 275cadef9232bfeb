#pragma once

#include <stdexcept>
#include <string>

namespace landspec {

/// Base of every error raised by the solvers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula (e.g. a leverage
/// denominator that is not positive).
class DomainError : public Error {
public:
    using Error::Error;
};

/// No balanced growth path exists for the given parameters.
class NoEquilibrium : public Error {
public:
    using Error::Error;
};

class RootNotBracketed : public Error {
public:
    using Error::Error;
};

class MissingParameter : public Error {
public:
    using Error::Error;
};

class ShootingFailed : public Error {
public:
    using Error::Error;
};

/// No admissible finite-difference step exists around the evaluation point.
class RegionTooNarrow : public Error {
public:
    using Error::Error;
};

/// Scenario text could not be parsed. `line()` is 1-based, 0 when the
/// problem is not tied to a particular line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace landspec
