#pragma once

#include <stdexcept>
#include <string>

namespace ionchain {

// Bad inputs: config files, CSV rows, out-of-range parameters.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solvers or fits that failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Physically invalid regimes: unstable species, zigzag instability,
// ejected ions, coincident positions.
class PhysicsError : public std::runtime_error {
public:
    explicit PhysicsError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ionchain
