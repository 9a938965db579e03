#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coprime {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pair is outside the tree domain (gcd != 1 or not 0 < a < b).
struct NotInTree : Error {
    using Error::Error;
};

// reduce() was asked to step above the root [1,2].
struct RootReached : Error {
    using Error::Error;
};

struct PositionOutOfRange : Error {
    using Error::Error;
};

struct EmptyCode : Error {
    using Error::Error;
};

// Bad character in a code string; position is 1-based.
struct InvalidCharacter : Error {
    InvalidCharacter(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
    std::size_t position;
};

} // namespace coprime
