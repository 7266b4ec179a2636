#pragma once

#include <stdexcept>
#include <string>

namespace steering {

// Raised when an input document cannot be read or does not match the schema.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a well-formed input violates a physical or structural
// precondition (normalization, Hermiticity, orthonormality, ranges).
struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steering
