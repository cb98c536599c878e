#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input tuple is not a weakly decreasing sequence of non-negative integers
/// of admissible length.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition (size mismatch, index out
/// of range, zero representation, non-prime modulus, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The Bernstein reduction needs a strictly positive weight sum.
class InapplicableBound : public Error {
public:
    using Error::Error;
};

/// A class function whose inner products are not non-negative integers.
class InvalidCharacter : public Error {
public:
    using Error::Error;
};

/// Malformed character-table text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace tsg
