#pragma once

#include <cmath>
#include <functional>

#include "mellin/core.hpp"
#include "mellin/gamma.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/series.hpp"

namespace mellin {

struct VerticalLine {
    double a = 0.5;  // abscissa; the inversion strip here is 0 < a < 1
    double T = 1.0;  // truncation height
    // When the transform decays at least like sup_f * |Gamma(a+it)|, set
    // this so the inversion folds the discarded |t| > T tail into its
    // error estimate.
    bool gamma_dominated = false;
    double sup_f = 1.0;
};

struct ResidueSeriesSpec {
    std::function<Complex(int)> residues;       // c_n
    std::function<Complex(Complex)> multiplier; // f, evaluated at s = -n
    double x = 1.0;
};

// G(s) = int_0^inf x^{s-1} g(x) dx.  Integrability at 0 is the caller's
// contract; for Re(s) <= 0 we attempt anyway and let the error estimate
// tell the story.
template <class G>
ValueWithError mellin_forward(G&& g, Complex s, const QuadratureConfig& cfg = {}) {
    if (!is_finite(s)) throw DomainError("mellin_forward: non-finite s");
    return integrate_halfline(
        [&](double x) {
            // When g has underflowed to zero the product is zero no matter
            // what x^{s-1} says; computing the power first can turn the far
            // tail into inf * 0 for Re(s) > 1.
            Complex gx(g(x));
            if (gx == 0.0) return Complex{0.0};
            return std::pow(Complex{x}, s - 1.0) * gx;
        },
        cfg);
}

namespace detail {

// Closed-form bound for sup_f * int_T^inf sqrt(2 pi) t^{a-1/2} e^{-pi t/2} dt
// (both half-lines).  For a > 1/2 the algebraic factor is folded in via
// the 1/(1 - c/(lambda T)) geometric majorant.
inline double line_tail_bound(double a, double T) {
    const double lam = 0.5 * pi;
    const double c = a - 0.5;
    double v = std::sqrt(2.0 * pi) * std::exp(-lam * T) * std::pow(T, c) / lam;
    if (c > 0) {
        double den = 1.0 - c / (lam * T);
        if (den <= 0) return HUGE_VAL;
        v /= den;
    }
    return v;
}

}  // namespace detail

// Smallest height T with 2 sup_f * tail(T) < tol: doubling scan, then
// bisection.  T = 1 is the floor of the search grid.
inline double choose_truncation(double a, double sup_f, double tol) {
    if (!(tol > 0)) throw DomainError("choose_truncation: tol must be > 0");
    if (sup_f < 0) throw DomainError("choose_truncation: negative sup_f");
    auto ok = [&](double T) {
        return 2.0 * sup_f * detail::line_tail_bound(a, T) < tol;
    };
    if (sup_f == 0.0 || ok(1.0)) return 1.0;
    double lo = 1.0, hi = 2.0;
    while (!ok(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e4)
            throw DomainError("choose_truncation: no T <= 1e4 meets the bound");
    }
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

// g(x) = (1/2 pi) int_{-T}^{T} x^{-(a+it)} G(a+it) dt.
template <class G>
ValueWithError mellin_inverse(G&& transform, double x, const VerticalLine& line,
                              const QuadratureConfig& cfg = {}) {
    if (!(x > 0)) throw DomainError("mellin_inverse: requires x > 0");
    auto r = integrate_finite(
        [&](double t) {
            Complex s{line.a, t};
            return std::pow(Complex{x}, -s) * Complex(transform(s));
        },
        -line.T, line.T, cfg);
    double inv = 1.0 / (2.0 * pi);
    double err = r.error_estimate * inv;
    if (line.gamma_dominated)
        err += std::pow(x, -line.a) * line.sup_f *
               detail::line_tail_bound(line.a, line.T) / pi;
    return {r.value * inv, err, r.evaluations};
}

// Sum c_n f(-n) x^n, the residue expansion of (1/2 pi i) int x^{-s} G(s) f(s) ds
// when G has simple poles at the nonpositive integers with residues c_n.
inline ValueWithError residue_series_general(const ResidueSeriesSpec& spec,
                                             const SeriesConfig& cfg = {}) {
    if (!(spec.x > 0)) throw DomainError("residue_series: requires x > 0");
    return sum_series(
        [&](int n) -> Complex {
            Complex fv = spec.multiplier(Complex{double(-n)});
            if (!is_finite(fv)) throw NonFiniteTerm("residue_series: f(-n) not finite");
            return spec.residues(n) * fv * std::pow(spec.x, n);
        },
        cfg);
}

// Gamma specialization: term(n) = gamma_residue(n) f(-n) x^n, with the
// (-x)^n/n! factor carried as a running ratio so large n neither
// overflows x^n nor underflows 1/n! separately.
template <class F>
ValueWithError residue_series(F&& f, double x, const SeriesConfig& cfg = {}) {
    if (!(x > 0)) throw DomainError("residue_series: requires x > 0");
    double coeff = 1.0;  // (-x)^n / n!
    int at = 0;
    auto term = [&, x](int n) -> Complex {
        while (at < n) coeff *= -x / ++at;
        Complex fv = f(Complex{double(-n)});
        if (!is_finite(fv)) throw NonFiniteTerm("residue_series: f(-n) not finite");
        return coeff * fv;
    };
    return sum_series(term, cfg);
}

}  // namespace mellin
