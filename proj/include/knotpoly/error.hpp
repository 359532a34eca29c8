#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotpoly {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that does not describe a well-formed object: jagged or out-of-range
/// tables, malformed PD codes, bad group tables.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Syntax error in a text format. `position` is a 0-based byte offset.
class ParseError : public StructuralError {
public:
    ParseError(const std::string& message, std::size_t position)
        : StructuralError(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A constructor parameter outside its domain, e.g. a non-invertible t.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation was applied to arguments it does not accept: mixing
/// polynomial modes, negative powers on a non-permutation column, a subset
/// that is not closed, comparing tables of different kinds.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Native 64-bit arithmetic would overflow.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace knotpoly
