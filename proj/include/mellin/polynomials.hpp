#pragma once

#include <cmath>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/series.hpp"

namespace mellin {

struct PolynomialCoeffs {
    std::vector<double> coeffs;  // ascending degree
    int degree() const { return int(coeffs.size()) - 1; }
};

struct BernoulliTable {
    std::vector<double> values;  // values[n] = B_n
};

struct EulerNumberTable {
    std::vector<double> values;  // values[n] = E_n
};

namespace detail {

// Pascal triangle row; exact in binary64 through every n used here.
inline std::vector<double> binomial_row(int n) {
    std::vector<double> row(n + 1, 1.0);
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

}  // namespace detail

// B_0..B_N from sum_{k<=n} C(n+1,k) B_k = 0.
inline BernoulliTable bernoulli_numbers(int N) {
    if (N < 0) throw DomainError("bernoulli_numbers: negative count");
    BernoulliTable t;
    t.values.assign(N + 1, 0.0);
    t.values[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        auto c = detail::binomial_row(n + 1);
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += c[k] * t.values[k];
        t.values[n] = -s / (n + 1);
    }
    return t;
}

inline PolynomialCoeffs bernoulli_poly_coeffs(int n) {
    if (n < 0) throw DomainError("bernoulli_poly_coeffs: negative degree");
    auto B = bernoulli_numbers(n).values;
    auto c = detail::binomial_row(n);
    PolynomialCoeffs p;
    p.coeffs.assign(n + 1, 0.0);
    // B_n(z) = sum_k C(n,k) B_k z^{n-k}
    for (int k = 0; k <= n; ++k) p.coeffs[n - k] = c[k] * B[k];
    return p;
}

inline Complex eval_poly(const PolynomialCoeffs& p, Complex z) {
    Complex acc = 0.0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + p.coeffs[k];
    return acc;
}

inline Complex bernoulli_poly(int n, Complex z) {
    return eval_poly(bernoulli_poly_coeffs(n), z);
}

// E_0..E_N from cosh * sech = 1; odd entries stay zero.
inline EulerNumberTable euler_numbers(int N) {
    if (N < 0) throw DomainError("euler_numbers: negative count");
    EulerNumberTable t;
    t.values.assign(N + 1, 0.0);
    t.values[0] = 1.0;
    for (int n = 2; n <= N; n += 2) {
        auto c = detail::binomial_row(n);
        double s = 0.0;
        for (int k = 0; k < n; k += 2) s += c[k] * t.values[k];
        t.values[n] = -s;
    }
    return t;
}

inline PolynomialCoeffs euler_poly_coeffs(int n) {
    if (n < 0) throw DomainError("euler_poly_coeffs: negative degree");
    // E_n(z) = sum_k C(n,k) (E_k / 2^k) (z - 1/2)^{n-k}, then shift back
    auto E = euler_numbers(n).values;
    auto c = detail::binomial_row(n);
    std::vector<double> shifted(n + 1, 0.0);  // in powers of (z - 1/2)
    for (int k = 0; k <= n; ++k)
        shifted[n - k] = c[k] * E[k] / std::pow(2.0, k);
    // binomial-expand each (z - 1/2)^m
    PolynomialCoeffs p;
    p.coeffs.assign(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        if (shifted[m] == 0.0) continue;
        auto cm = detail::binomial_row(m);
        double sign = 1.0;
        for (int j = m; j >= 0; --j) {
            p.coeffs[j] += shifted[m] * cm[j] * sign / std::pow(2.0, m - j);
            sign = -sign;
        }
    }
    return p;
}

inline Complex euler_poly(int n, Complex z) {
    return eval_poly(euler_poly_coeffs(n), z);
}

// Stirling numbers of the second kind, rows 0..n.
inline std::vector<std::vector<double>> stirling2_triangle(int n) {
    std::vector<std::vector<double>> S(n + 1);
    S[0] = {1.0};
    for (int m = 1; m <= n; ++m) {
        S[m].assign(m + 1, 0.0);
        for (int k = 1; k <= m; ++k) {
            double up = k < m ? S[m - 1][k] : 0.0;
            S[m][k] = k * up + S[m - 1][k - 1];
        }
    }
    return S;
}

inline PolynomialCoeffs exp_poly_coeffs(int n) {
    if (n < 0) throw DomainError("exp_poly_coeffs: negative degree");
    auto S = stirling2_triangle(n);
    PolynomialCoeffs p;
    p.coeffs.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) p.coeffs[k] = S[n][k];
    return p;
}

// phi_n(z) = sum_k S(n,k) z^k; phi_n(1) are the Bell numbers.
inline Complex exp_poly(int n, Complex z) {
    return eval_poly(exp_poly_coeffs(n), z);
}

// phi_lambda(z) = e^{-z} sum_k k^lambda z^k / k!, the series route the
// polynomial route is checked against.  Any real lambda >= 0 is accepted,
// not just integers; 0^0 = 1, 0^lambda = 0 otherwise.
inline double exp_poly_dobinski(double lambda, double z,
                                const SeriesConfig& cfg = {}) {
    if (!(lambda >= 0.0)) throw DomainError("exp_poly_dobinski: lambda < 0");
    if (!(z > 0.0)) throw DomainError("exp_poly_dobinski: z <= 0");
    double log_z = std::log(z);
    auto term = [&](int k) -> Complex {
        if (k == 0) return lambda == 0.0 ? std::exp(-z) : 0.0;
        // k^lambda z^k / k! in log form to dodge overflow at large z
        double lg = std::lgamma(k + 1.0);
        return std::exp(lambda * std::log(double(k)) + k * log_z - lg - z);
    };
    return sum_series(term, cfg).value.real();
}

inline Complex hermite(int n, Complex z) {
    if (n < 0) throw DomainError("hermite: negative degree");
    Complex h0 = 1.0;
    if (n == 0) return h0;
    Complex h1 = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        Complex h2 = 2.0 * z * h1 - 2.0 * double(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

}  // namespace mellin
