#pragma once

#include <stdexcept>
#include <string>

namespace evpc {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (bad token, short read, wrong magic, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally valid input that violates a domain invariant
// (out-of-bounds coordinate, decreasing timestamp, bad shape, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Geometric configuration without a usable solution (parallel rays,
// zero baseline, point at infinity).
class DegenerateGeometryError : public Error {
public:
    explicit DegenerateGeometryError(const std::string& msg) : Error(msg) {}
};

}  // namespace evpc
