#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gysin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition (CLI exit code 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The inputs are well formed but the requested operation has no valid
/// result, e.g. halving a class with an odd coefficient (CLI exit code 2).
class MathContractError : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not (CLI exit code 3).
class OracleMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : ValidationError(what + " at offset " + std::to_string(offset)),
          message_(what),
          offset_(offset) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

} // namespace gysin
