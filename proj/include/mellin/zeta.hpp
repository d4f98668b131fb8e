#pragma once

#include <array>
#include <cmath>

#include "mellin/core.hpp"
#include "mellin/gamma.hpp"
#include "mellin/polynomials.hpp"

namespace mellin {

struct ZetaConfig {
    // Direct-sum length before the Euler-Maclaurin correction; 0 picks a
    // length from (s, z) automatically (see choose_direct_terms).
    int em_terms = 0;
    int em_order = 12;  // number of B_{2j} correction terms, <= 12
    double pole_guard = 1e-8;
};

namespace detail {

// B_{2j} / (2j)! for j = 1..12, from the exact rationals.  Deliberately
// inline literals: the Euler-Maclaurin route must not touch
// bernoulli_numbers(), which sits on the other side of the zeta-vs-
// Bernoulli identity this library verifies.
inline constexpr std::array<double, 12> em_coeff = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
    (-3617.0 / 510.0) / 20922789888000.0,
    (43867.0 / 798.0) / 6402373705728000.0,
    (-174611.0 / 330.0) / 2432902008176640000.0,
    (854513.0 / 138.0) / 1124000727777607680000.0,
    (-236364091.0 / 2730.0) / 620448401733239439360000.0,
};

// |B_{2M+2} / (2M+2)!|, the magnitude entering the first dropped term.
inline double em_remainder_coeff(int M) {
    if (M < 12) return std::abs(em_coeff[M]);
    return (8553103.0 / 6.0) / 403291461126605635584000000.0;  // B_26 / 26!
}

// Direct-sum length balancing EM truncation against cancellation.  For
// Re(s) >= 0 a length growing with |Im s| suffices.  For Re(s) < 0 the
// direct terms grow like (|z|+N)^{1-Re s} against an O(1) result, so N
// minimizes eps*(|z|+N)^{1-Re s} + |poch(s,2M+1)| C_M (|z|+N)^{-Re s-2M-1}.
// At negative integer s the pochhammer factor vanishes (EM is exact
// for every N, including N = 0) and the smallest N wins.
inline int choose_direct_terms(Complex s, Complex z, int M) {
    if (s.real() >= 0.0)
        return std::max(12.0, std::ceil(1.3 * std::abs(s.imag())) +
                                  std::ceil(s.real()));
    double p = std::abs(pochhammer(s, 2 * M + 1)) * em_remainder_coeff(M);
    double az = std::abs(z);
    int best_n = 0;
    double best_err = HUGE_VAL;
    for (int n = 0; n <= 64; ++n) {
        double q = az + n;
        double err = 2.2e-16 * std::pow(q, 1.0 - s.real()) +
                     p * std::pow(q, -s.real() - 2 * M - 1);
        if (err < best_err) {
            best_n = n;
            best_err = err;
        }
    }
    return best_n;
}

}  // namespace detail

// Hurwitz zeta by Euler-Maclaurin continuation:
//   sum_{k<N} (z+k)^{-s} + (z+N)^{1-s}/(s-1) + (z+N)^{-s}/2
//     + sum_j B_{2j}/(2j)! poch(s, 2j-1) (z+N)^{-s-2j+1}.
// Valid over the whole s plane away from s = 1; needs Re(z) > 0.
inline Complex hurwitz_zeta(Complex s, Complex z, const ZetaConfig& cfg = {}) {
    if (!is_finite(s) || !is_finite(z))
        throw DomainError("hurwitz_zeta: non-finite argument");
    if (std::abs(s - 1.0) < cfg.pole_guard)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(z.real() > 0.0))
        throw DomainError("hurwitz_zeta: requires Re(z) > 0");
    int M = cfg.em_order;
    if (M < 1 || M > 12) throw DomainError("hurwitz_zeta: em_order in 1..12");
    int N = cfg.em_terms > 0 ? cfg.em_terms
                             : detail::choose_direct_terms(s, z, M);
    Complex acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::pow(z + double(k), -s);
    Complex zn = z + double(N);
    acc += std::pow(zn, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(zn, -s);
    for (int j = 1; j <= M; ++j)
        acc += detail::em_coeff[j - 1] * pochhammer(s, 2 * j - 1) *
               std::pow(zn, -s - double(2 * j - 1));
    return acc;
}

// zeta(-n, z) = -B_{n+1}(z)/(n+1), the closed form the EM route is
// checked against.
inline Complex hurwitz_zeta_neg_int(int n, Complex z) {
    if (n < 0) throw DomainError("hurwitz_zeta_neg_int: negative index");
    return -bernoulli_poly(n + 1, z) / double(n + 1);
}

namespace detail {

// zeta(s,a) - zeta(s,b) is entire; near s = 1 the poles cancel but the
// subtraction does not, so switch to a 4-term Taylor expansion with
// coefficients from Cauchy's integral on a radius-1/2 circle.
inline Complex zeta_diff(Complex s, Complex a, Complex b,
                         const ZetaConfig& cfg) {
    if (std::abs(s - 1.0) >= 1e-4)
        return hurwitz_zeta(s, a, cfg) - hurwitz_zeta(s, b, cfg);
    const double r = 0.5;
    const int n = 32;
    std::array<Complex, 4> coef{};
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * pi * j / n;
        Complex w = std::exp(Complex{0.0, th});
        Complex val =
            hurwitz_zeta(1.0 + r * w, a, cfg) - hurwitz_zeta(1.0 + r * w, b, cfg);
        for (int k = 0; k < 4; ++k) coef[k] += val * std::exp(Complex{0.0, -k * th});
    }
    Complex acc = 0.0;
    for (int k = 3; k >= 0; --k)
        acc = acc * (s - 1.0) + coef[k] / (n * std::pow(r, k));
    return acc;
}

}  // namespace detail

// Alternating Hurwitz zeta, eta(s,z) = sum (-1)^n (n+z)^{-s}, via the
// even/odd split 2^{-s} (zeta(s, z/2) - zeta(s, (z+1)/2)).  Entire in s.
inline Complex alt_hurwitz_eta(Complex s, Complex z, const ZetaConfig& cfg = {}) {
    return std::pow(2.0, -s) * detail::zeta_diff(s, 0.5 * z, 0.5 * (z + 1.0), cfg);
}

// L(s) = sum (-1)^n (2n+1)^{-s} (Dirichlet beta) via the mod-4 split.
inline Complex euler_L(Complex s, const ZetaConfig& cfg = {}) {
    return std::pow(4.0, -s) * detail::zeta_diff(s, 0.25, 0.75, cfg);
}

}  // namespace mellin
