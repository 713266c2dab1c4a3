#pragma once

#include <stdexcept>
#include <string>

namespace fpk {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument violates a domain constraint (p < 2, gcd failure, ...).
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Modular inverse requested for a residue that is not a unit.
class NotAUnit : public Error {
public:
    using Error::Error;
};

/// A tangle violates the perfect-matching or gluing-consistency invariant.
class InvalidTangle : public Error {
public:
    using Error::Error;
};

/// A diagram closes up to more than one component.
class NotAKnot : public Error {
public:
    using Error::Error;
};

/// A torus knot has no free symmetry of the requested order.
class NoFreePeriod : public Error {
public:
    using Error::Error;
};

/// Malformed diagram text. Carries the 1-based line and column of the offence.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace fpk
