#pragma once

#include <stdexcept>

namespace gtrig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iterative kernel exhausted its iteration budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Parameters outside the hypothesis of the inequality being checked.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Second derivative requested at a point where it does not exist.
class SingularPointError : public Error {
public:
    using Error::Error;
};

}  // namespace gtrig
