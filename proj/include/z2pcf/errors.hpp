#pragma once

#include <stdexcept>
#include <string>

namespace z2pcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary operation on elements of different levels without an explicit lift.
struct LevelMismatchError : Error {
    using Error::Error;
};

/// descend() target does not contain the element.
struct NotInSubfieldError : Error {
    using Error::Error;
};

/// A certified comparison could not be separated at the maximum working
/// precision. Carries the precision that was reached.
struct UndecidedError : Error {
    explicit UndecidedError(const std::string& what, long precision_bits)
        : Error(what + " (undecided at " + std::to_string(precision_bits) + " bits)"),
          precision(precision_bits) {}
    long precision;
};

/// Argument outside the operation's domain (zero divisor, bad index, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Text input that does not match the element/PCF grammar.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace z2pcf
