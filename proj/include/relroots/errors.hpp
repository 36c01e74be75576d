#pragma once

#include <stdexcept>

namespace relroots {

// Precondition violations (bad ranks, out-of-range elements, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work refused because it would exceed a documented cap or budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (JSON files, coefficient strings).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace relroots
