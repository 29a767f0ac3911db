#pragma once

#include <stdexcept>
#include <string>

namespace simet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, files, or specs. CLI maps this to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure ran out of budget. Carries the accuracy it reached.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual_achieved)
        : Error(msg), residual(residual_achieved) {}

    double residual;
};

}  // namespace simet
