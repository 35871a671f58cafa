#pragma once

#include <stdexcept>
#include <string>

namespace twoschur {

// Base for every error raised by the library. Mathematical "failures" found
// during verification are reported as data, never thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPrime : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class UnsupportedCharacteristic : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace twoschur
