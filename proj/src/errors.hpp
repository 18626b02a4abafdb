#pragma once

#include <stdexcept>
#include <string>

namespace cce {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data violates an invariant (negative entry, asymmetry, bad route, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A parameter is out of its allowed range (sigma <= 0, k_max < 1, ...).
class ParamError : public Error {
public:
    using Error::Error;
};

// A file could not be read or parsed; the message carries file and line.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cce
