#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfinite {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A configured cost cap (brute-force length, scan depth) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Arithmetic across quadratic fields with different radicands.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class Nonconvergence : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, or 0 when the input is not line oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace cfinite
