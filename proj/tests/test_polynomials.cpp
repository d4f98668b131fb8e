#include <catch2/catch_amalgamated.hpp>

#include "mellin/gamma.hpp"
#include "mellin/identities.hpp"
#include "mellin/polynomials.hpp"

using namespace mellin;

namespace {

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Extract n! [t^n] G(t) from a generating function by a Cauchy integral on
// the circle |t| = r with the trapezoid rule (spectrally accurate here).
// r ~ 2 keeps the 1/r^n factor from amplifying roundoff while staying
// inside every pole below (the nearest is i*pi, from the Euler family).
template <class G>
Complex gf_coefficient(G&& g, int n, double r = 2.0, int nodes = 128) {
    Complex acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double th = 2.0 * pi * k / nodes;
        Complex t = r * std::exp(Complex{0.0, th});
        acc += g(t) / std::pow(t, n);
    }
    return acc / double(nodes);
}

double factorial(int n) { return std::exp(std::lgamma(double(n) + 1.0)); }

}  // namespace

TEST_CASE("Bernoulli numbers match exact rationals") {
    auto B = bernoulli_numbers(30).values;
    CHECK(B[0] == 1.0);
    CHECK(B[1] == Catch::Approx(-0.5).margin(1e-16));
    CHECK(B[2] == Catch::Approx(1.0 / 6.0));
    CHECK(B[3] == Catch::Approx(0.0).margin(1e-16));
    CHECK(B[4] == Catch::Approx(-1.0 / 30.0));
    CHECK(B[6] == Catch::Approx(1.0 / 42.0));
    CHECK(B[8] == Catch::Approx(-1.0 / 30.0));
    CHECK(B[10] == Catch::Approx(5.0 / 66.0));
    CHECK(B[12] == Catch::Approx(-691.0 / 2730.0));
    CHECK(rel(Complex{B[30]}, Complex{601580873.90064237}) < 1e-13);
}

TEST_CASE("Bernoulli polynomials satisfy their functional equations") {
    Lcg rng(301);
    for (int n = 0; n <= 14; ++n) {
        Complex z{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
        // reflection B_n(1-z) = (-1)^n B_n(z)
        Complex lhs = bernoulli_poly(n, 1.0 - z);
        Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * bernoulli_poly(n, z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
        // forward difference B_n(z+1) - B_n(z) = n z^{n-1}
        if (n >= 1) {
            Complex d = bernoulli_poly(n, z + 1.0) - bernoulli_poly(n, z);
            Complex want = double(n) * std::pow(z, n - 1);
            CHECK(std::abs(d - want) < 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("Euler numbers match the classical table") {
    auto E = euler_numbers(16).values;
    double want[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521,
                     0, 2702765, 0, -199360981, 0, 19391512145.0};
    for (int n = 0; n <= 16; ++n) CHECK(E[n] == Catch::Approx(want[n]));
}

TEST_CASE("Euler polynomials satisfy their functional equations") {
    Lcg rng(302);
    auto E = euler_numbers(14).values;
    for (int n = 0; n <= 14; ++n) {
        Complex z{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
        Complex lhs = euler_poly(n, 1.0 - z);
        Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * euler_poly(n, z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
        Complex s = euler_poly(n, z + 1.0) + euler_poly(n, z);
        Complex want = 2.0 * std::pow(z, n);
        CHECK(std::abs(s - want) < 1e-9 * std::max(1.0, std::abs(want)));
        // midpoint value ties polynomials to numbers: E_n(1/2) = E_n / 2^n
        Complex mid = euler_poly(n, Complex{0.5});
        CHECK(std::abs(mid - E[n] / std::pow(2.0, n)) <
              1e-10 * std::max(1.0, std::abs(E[n])));
    }
}

TEST_CASE("Stirling2 row sums are the Bell numbers") {
    auto S = stirling2_triangle(12);
    double bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975,
                     678570, 4213597};
    for (int n = 0; n <= 12; ++n) {
        double row = 0.0;
        for (double v : S[n]) row += v;
        CHECK(row == Catch::Approx(bell[n]));
        CHECK(exp_poly(n, Complex{1.0}).real() == Catch::Approx(bell[n]));
    }
    CHECK(S[5][2] == 15.0);
    CHECK(S[6][3] == 90.0);
}

TEST_CASE("Dobinski series route agrees with the polynomial route") {
    // the series already carries the e^{-z} factor
    for (int n = 0; n <= 10; ++n)
        for (double z : {0.5, 1.0, 2.0, 4.0}) {
            double series = exp_poly_dobinski(double(n), z);
            double want = exp_poly(n, Complex{z}).real();
            CHECK(std::abs(series - want) <
                  1e-10 * std::max(1.0, std::abs(want)));
        }
    CHECK(exp_poly_dobinski(0.0, 3.7) == Catch::Approx(1.0));
    CHECK_THROWS_AS(exp_poly_dobinski(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(exp_poly_dobinski(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(exp_poly_dobinski(2.0, -1.0), DomainError);
}

TEST_CASE("Hermite polynomials match closed forms") {
    Lcg rng(303);
    for (int k = 0; k < 20; ++k) {
        Complex z{rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0)};
        CHECK(std::abs(hermite(0, z) - 1.0) == 0.0);
        CHECK(std::abs(hermite(1, z) - 2.0 * z) < 1e-14);
        CHECK(std::abs(hermite(2, z) - (4.0 * z * z - 2.0)) < 1e-13);
        Complex h3 = 8.0 * z * z * z - 12.0 * z;
        CHECK(std::abs(hermite(3, z) - h3) < 1e-12 * std::max(1.0, std::abs(h3)));
    }
    CHECK(hermite(7, Complex{1.5}).real() == Catch::Approx(801.0));
    CHECK_THROWS_AS(hermite(-1, Complex{0.0}), DomainError);
}

TEST_CASE("polynomial families match their generating functions") {
    // coefficient extraction from the exponential generating functions is an
    // independent oracle: no recurrence shared with the polynomial code
    Lcg rng(304);
    for (int trial = 0; trial < 6; ++trial) {
        Complex z{rng.uniform(-1.5, 1.5), 0.0};
        int n = rng.uniform_int(0, 10);

        auto bern_gf = [&](Complex t) {
            return t * std::exp(z * t) / (std::exp(t) - 1.0);
        };
        Complex b = gf_coefficient(bern_gf, n) * factorial(n);
        Complex bw = bernoulli_poly(n, z);
        CHECK(std::abs(b - bw) < 1e-8 * std::max(1.0, std::abs(bw)));

        auto euler_gf = [&](Complex t) {
            return 2.0 * std::exp(z * t) / (std::exp(t) + 1.0);
        };
        Complex e = gf_coefficient(euler_gf, n) * factorial(n);
        CHECK(std::abs(e - euler_poly(n, z)) <
              1e-8 * std::max(1.0, std::abs(euler_poly(n, z))));

        auto bell_gf = [&](Complex t) {
            return std::exp(z * (std::exp(t) - 1.0));
        };
        Complex p = gf_coefficient(bell_gf, n) * factorial(n);
        Complex pw = exp_poly(n, z);
        CHECK(std::abs(p - pw) < 1e-8 * std::max(1.0, std::abs(pw)));

        auto hermite_gf = [&](Complex t) {
            return std::exp(2.0 * z * t - t * t);
        };
        Complex h = gf_coefficient(hermite_gf, n) * factorial(n);
        CHECK(std::abs(h - hermite(n, z)) <
              1e-8 * std::max(1.0, std::abs(hermite(n, z))));
    }
}
