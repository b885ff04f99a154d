#pragma once

#include <stdexcept>
#include <string>

namespace dwind {

/// Bad user input: malformed expressions, out-of-range indices, incomplete tables.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed quantity failed a self-check. Never a user mistake.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The U-truncation window was too small for a stable answer.
class TruncationError : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace dwind
