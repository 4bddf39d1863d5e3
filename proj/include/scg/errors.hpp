#pragma once

#include <stdexcept>
#include <string>

namespace scg {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input documents (graph JSON, class JSON, decimal literals).
// The message always carries the offending token.
class ParseError : public Error {
public:
    using Error::Error;
};

// Violated operation preconditions: unknown vertex, missing leaves,
// disconnected input, weight conflicts, size bounds.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace scg
