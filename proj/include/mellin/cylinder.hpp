#pragma once

#include <cmath>

#include "mellin/core.hpp"
#include "mellin/gamma.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

// Weber parabolic cylinder D_n for integer order, by the three-term
// recurrence D_{n+1}(x) = x D_n(x) - n D_{n-1}(x) seeded with
// D_0 = e^{-x^2/4}, D_1 = x e^{-x^2/4}.  Independent of the Hermite
// recurrence (different coefficients and base cases), which is the point:
// the two meet in the H_n(z) = 2^{n/2} e^{z^2/2} D_n(sqrt(2) z) check.
inline double parabolic_cylinder_int(int n, double x) {
    if (n < 0) throw DomainError("parabolic_cylinder_int: negative order");
    double g = std::exp(-0.25 * x * x);
    double d0 = g;
    if (n == 0) return d0;
    double d1 = x * g;
    for (int k = 1; k < n; ++k) {
        double d2 = x * d1 - double(k) * d0;
        d0 = d1;
        d1 = d2;
    }
    return d1;
}

// Negative order via the integral representation
//   D_{-s}(x) = e^{-x^2/4} / Gamma(s) * int_0^inf e^{-xt - t^2/2} t^{s-1} dt,
// valid for Re(s) > 0; covers the strip the Mellin checks need.
inline Complex parabolic_cylinder_neg(Complex s, double x,
                                      const QuadratureConfig& cfg = {}) {
    if (!(s.real() > 0.0))
        throw DomainError("parabolic_cylinder_neg: requires Re(s) > 0");
    auto integrand = [&](double t) -> Complex {
        double e = -x * t - 0.5 * t * t;
        if (e < -700.0) return 0.0;
        return std::pow(Complex{t}, s - 1.0) * std::exp(e);
    };
    Complex integral = integrate_halfline(integrand, cfg).value;
    return std::exp(-0.25 * x * x) / gamma(s) * integral;
}

}  // namespace mellin
