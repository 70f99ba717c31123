#pragma once

#include <stdexcept>
#include <string>

namespace hexalink {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input data: broken invariants, malformed values, bad preconditions.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Mathematically degenerate situation (zero norms, coincident axes, empty curves).
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

// A generic-case hypothesis fails (repeated norm factors, non-invertible remainders).
class NonGenericError : public Error {
public:
    explicit NonGenericError(const std::string& msg) : Error(msg) {}
};

// Numeric failure in float mode (no convergence, overflow, unusable tolerance).
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

} // namespace hexalink
