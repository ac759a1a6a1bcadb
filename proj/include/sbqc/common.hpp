// common.hpp — shared aliases, constants and error types
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sbqc {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Argument outside the mathematical domain of an operation (infrared
// divergence, negative frequency, undefined thermal state, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature failed to reach the requested tolerance.
class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& msg, double value, double err_estimate)
        : std::runtime_error(msg), value(value), err_estimate(err_estimate) {}
    double value;
    double err_estimate;
};

// A routine was called with inputs that violate its contract (wrong coupling
// operator for a closed form, non-even sampler for a symmetry check, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Adaptive ODE step-size underflow.
class stiffness_error : public std::runtime_error {
public:
    explicit stiffness_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sbqc
