// errors.hpp: Exception types shared by all qbm modules

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbm {

// Invalid run configuration (bad key, inconsistent environment, empty grid).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Argument outside the guard of an asymptotic or series expansion.
class ValidityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnsupportedPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures of a numerical procedure that was given valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double estimate, double error_estimate)
        : NumericalError(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

class TruncationError : public NumericalError {
public:
    TruncationError(const std::string& what, double achieved_deficit, std::size_t dim)
        : NumericalError(what), achieved_deficit_(achieved_deficit), dim_(dim) {}

    double achieved_deficit() const noexcept { return achieved_deficit_; }
    std::size_t dim() const noexcept { return dim_; }

private:
    double achieved_deficit_;
    std::size_t dim_;
};

class NumericalInstability : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace qbm
