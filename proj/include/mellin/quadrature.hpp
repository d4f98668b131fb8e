#pragma once

#include <array>
#include <cmath>

#include "mellin/core.hpp"

namespace mellin {

namespace detail {

// Gauss-Kronrod 7-15 node set (QUADPACK dqk15).  The embedded Gauss rule
// reuses the odd Kronrod nodes, so one panel costs 15 evaluations and
// yields both estimates.
inline constexpr std::array<double, 8> gk_xk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> gk_wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Gk15Result {
    Complex value;
    double err;
};

template <class F>
Gk15Result gk15(F&& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    Complex fc = f(c);
    if (!is_finite(fc)) throw NonFiniteIntegrand("non-finite integrand value");
    Complex resk = gk_wk[7] * fc;
    Complex resg = gk_wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * gk_xk[j];
        Complex f1 = f(c - x);
        Complex f2 = f(c + x);
        if (!is_finite(f1) || !is_finite(f2))
            throw NonFiniteIntegrand("non-finite integrand value");
        resk += gk_wk[j] * (f1 + f2);
        if (j % 2 == 1) resg += gk_wg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

}  // namespace detail

// Adaptive bisection on [lo, hi].  Tolerance is split between halves, so
// the sum of panel errors stays below the requested budget.
template <class F>
ValueWithError integrate_finite(F&& f, double lo, double hi,
                                const QuadratureConfig& cfg = {}) {
    if (!(lo < hi)) throw DomainError("integrate_finite: requires lo < hi");
    long evals = 0;

    auto whole = detail::gk15(f, lo, hi);
    evals += 15;
    double tol = std::max({cfg.abs_tol, cfg.rel_tol * std::abs(whole.value),
                           1e-16 * std::abs(whole.value)});

    struct Rec {
        F& f;
        long& evals;
        int max_depth;
        std::pair<Complex, double> go(double a, double b, double t, int depth) {
            auto r = detail::gk15(f, a, b);
            evals += 15;
            if (r.err <= t || depth >= max_depth) return {r.value, r.err};
            double m = 0.5 * (a + b);
            auto left = go(a, m, 0.5 * t, depth + 1);
            auto right = go(m, b, 0.5 * t, depth + 1);
            return {left.first + right.first, left.second + right.second};
        }
    } rec{f, evals, cfg.max_refinements};

    auto [value, err] = rec.go(lo, hi, tol, 0);
    return {value, err, evals};
}

// exp-sinh substitution x = exp((pi/2) sinh t) maps (0, inf) to the real
// line; the trapezoid rule on the transformed integrand converges
// double-exponentially, and power-law endpoint behaviour needs no hints.
// Levels double the node density until two passes agree.
template <class F>
ValueWithError integrate_halfline(F&& f, const QuadratureConfig& cfg = {}) {
    const double t_max = 6.8;  // exp((pi/2) sinh 6.8) spans ~e^{+-702}
    long evals = 0;

    auto node = [&](double t) -> Complex {
        double u = 0.5 * pi * std::sinh(t);
        if (u > 700.0) return 0.0;
        double x = std::exp(u);
        double w = x * 0.5 * pi * std::cosh(t);
        if (w == 0.0 || !std::isfinite(w)) return 0.0;
        Complex fx = f(x);
        if (!is_finite(fx)) throw NonFiniteIntegrand("non-finite integrand value");
        ++evals;
        return w * fx;
    };

    double h = 1.0;
    Complex total = node(0.0);
    for (int k = 1; k * h <= t_max; ++k) total += node(k * h) + node(-k * h);
    Complex prev = total * h;
    double est = std::abs(prev);

    Complex cur = prev;
    for (int level = 1; level <= cfg.max_refinements; ++level) {
        h *= 0.5;
        Complex add = 0.0;
        for (int k = 1; k * h <= t_max; k += 2) add += node(k * h) + node(-k * h);
        cur = 0.5 * prev + h * add;
        est = std::abs(cur - prev);
        prev = cur;
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur));
        if (est <= tol && level >= 3) return {cur, est, evals};
    }
    // Ran out of levels.  A result with no significant digits is a
    // failure; anything better is returned with its honest estimate.
    if (est > 0.1 * std::abs(cur))
        throw NoConvergence("integrate_halfline: refinement stalled");
    return {cur, est, evals};
}

}  // namespace mellin
