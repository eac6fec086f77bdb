#pragma once

#include <stdexcept>
#include <string>

namespace treeshuffle {

/// Raised for malformed files, invalid arguments and exceeded size caps.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a cross-checked identity fails (e.g. the two chamber counts
/// disagree). The CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treeshuffle
