#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jumpcon {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, wrong vector length.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Forms with different numbers of variables were combined.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation (zero form, point off a surface, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A structural invariant was violated (asymmetric matrix, frame mismatch).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent user input (parse errors, duplicate points).
class InputError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but violates a general-position or stability
/// hypothesis. Carries the validation flags that explain the degeneracy.
class DegenerateError : public Error {
public:
    DegenerateError(const std::string& what, std::vector<std::string> flags = {})
        : Error(what), flags_(std::move(flags)) {}

    const std::vector<std::string>& flags() const noexcept { return flags_; }

private:
    std::vector<std::string> flags_;
};

}  // namespace jumpcon
