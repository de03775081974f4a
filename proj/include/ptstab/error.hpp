#pragma once

#include <stdexcept>
#include <string>

namespace ptstab {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside the regime where its formula applies.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The configuration makes a closed-form expression singular (zero denominator).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace ptstab
