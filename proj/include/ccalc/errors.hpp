#pragma once

#include <stdexcept>
#include <string>

namespace ccalc {

/// Base type for all errors raised by the library.
class CalcError : public std::runtime_error {
public:
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid ring presentation, or values from distinct rings combined.
class RingError : public CalcError {
public:
    using CalcError::CalcError;
};

/// Operation precondition violated (window, degree, rank, locus index...).
class ContractError : public CalcError {
public:
    using CalcError::CalcError;
};

/// A Laurent computation descended below the configured guard floor.
class LaurentGuardError : public CalcError {
public:
    using CalcError::CalcError;
};

/// Configuration document is malformed or declares invalid objects.
class ConfigError : public CalcError {
public:
    using CalcError::CalcError;
};

}  // namespace ccalc
