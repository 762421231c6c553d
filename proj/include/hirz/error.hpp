#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hirz {

// Base for everything we throw on bad user input; the CLI maps these to exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical precondition violated (zero denominator, ambient mismatch, ...).
struct DomainError : Error {
    using Error::Error;
};

// Input is well-formed but outside what we implement (e.g. chi of a bundle with
// no tracked K-class).
struct UnsupportedError : Error {
    using Error::Error;
};

// Curve/surface context data is internally inconsistent.
struct InconsistentContextError : Error {
    using Error::Error;
};

// Text didn't parse.  `position` is 1-based; `expected` describes the token set
// we would have accepted there.
struct ParseError : Error {
    std::size_t position;
    std::string expected;

    ParseError(std::size_t pos, std::string exp, const std::string& msg)
        : Error(msg), position(pos), expected(std::move(exp)) {}
};

// A broken internal invariant (a bug, not a user error); CLI exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hirz
