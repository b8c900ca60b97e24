#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside an operation's domain (e.g. omega <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A denominator vanished: a reflection-factor pole or a cavity resonance.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive integration ran out of subdivisions. Carries the best estimate.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double best_value, double error_estimate)
        : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

} // namespace casimir
