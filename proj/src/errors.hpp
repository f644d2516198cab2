#pragma once

#include <stdexcept>

namespace charforge {

// A computation exceeds a documented size bound.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valid input that the library does not handle (unknown type, unsupported combination).
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace charforge
