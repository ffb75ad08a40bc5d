#pragma once

#include <stdexcept>
#include <string>

namespace ugx {

// Error taxonomy mirrored by the CLI exit codes: input problems exit 1,
// numerical/invariant failures exit 2.

struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds an exact-computation budget (subset enumeration,
// brute force, derandomized enumeration, ...).
struct size_error : input_error {
    explicit size_error(const std::string& what) : input_error(what) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigensolver gave up; carries the best Ritz estimate and its
// residual so callers can decide whether the partial answer is usable.
struct eigensolver_error : numeric_error {
    eigensolver_error(const std::string& what, double best, double residual)
        : numeric_error(what), best_estimate(best), residual(residual) {}
    double best_estimate;
    double residual;
};

}  // namespace ugx
