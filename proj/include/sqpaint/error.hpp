#pragma once

#include <stdexcept>
#include <string>

namespace sqpaint {

/// Malformed input: bad edge pairs, unknown ids, invalid parameters.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An instance exceeds the exact engine's size or node budget. Engines throw
/// this instead of returning a partial answer.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact counter overflowed its 64-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace sqpaint
