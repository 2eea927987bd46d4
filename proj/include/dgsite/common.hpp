#pragma once

#include <stdexcept>

namespace dgsite {

// Input file cannot be read or a row is malformed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Data is well-formed but violates a model invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dgsite
