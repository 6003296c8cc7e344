// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <stdexcept>
#include <string>

namespace runoff {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data: CSV format and shape problems,
// positivity violations, nonnumeric tokens. Messages name the offending
// line, cell or column.
class validation_error : public error {
public:
    using error::error;
};

// API misuse: wrong prediction key set, factor count mismatch, prior of
// the wrong length. Not reachable from well-formed CLI invocations.
class contract_error : public error {
public:
    using error::error;
};

// Mathematical preconditions violated (nonpositive gamma argument,
// moment that does not exist, zero denominator) or an algorithm failed.
class numeric_error : public error {
public:
    using error::error;
};

// Quadrature ran out of subdivisions. Carries the best estimate so
// callers can decide whether it is still usable.
class convergence_error : public numeric_error {
public:
    convergence_error(const std::string& what, double best_estimate,
                      double estimated_error)
        : numeric_error(what),
          best_estimate_(best_estimate),
          estimated_error_(estimated_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double estimated_error() const noexcept { return estimated_error_; }

private:
    double best_estimate_;
    double estimated_error_;
};

}  // namespace runoff
