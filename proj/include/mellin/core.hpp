#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mellin {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Error taxonomy. Everything numeric throws one of these; the identity
// harness catches them and records failing checks instead of aborting.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_refinements = 12;  // bisection depth per panel
};

struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 10000;
    int consecutive_small = 2;
};

struct ValueWithError {
    Complex value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

}  // namespace mellin
