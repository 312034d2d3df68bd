#pragma once

#include <stdexcept>
#include <string>

namespace polyef {

// Base class for all recoverable library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: unknown names, bad files, out-of-range arguments.
class InputError : public Error {
public:
    using Error::Error;
};

// Vector length does not match the ambient variable count.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An enumeration or brute-force cap was exceeded.
class ScaleError : public Error {
public:
    using Error::Error;
};

// Systems cannot be composed: projection mismatch, unknown variable.
class CompositionError : public Error {
public:
    using Error::Error;
};

// A builder received input it cannot construct from
// (zero denominator, infeasible block, infeasible dualization input).
class ConstructionError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A matroid specification violates its defining counting condition.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace polyef
