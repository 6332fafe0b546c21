#pragma once

#include <stdexcept>
#include <string>

namespace narycat {

// Malformed text: unbalanced parentheses, stray characters, bad step letters.
struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed text whose factor counts violate the d-ary rule
// (every factor sequence must have length = 1 mod d-1).
struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

// An enumerator was asked to produce more objects than its guard allows.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace narycat
