#pragma once

#include <stdexcept>
#include <string>

namespace qharm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDimension : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct PoleAtPoint : Error { using Error::Error; };

// A violated internal invariant, e.g. exact division that the theory
// guarantees turns out inexact. Maps to exit code 3 in the CLI.
struct InternalError : Error { using Error::Error; };

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace qharm
