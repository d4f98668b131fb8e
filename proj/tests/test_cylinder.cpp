#include <catch2/catch_amalgamated.hpp>

#include "mellin/cylinder.hpp"

using namespace mellin;

TEST_CASE("integer-order cylinder functions match closed forms") {
    for (double x : {-2.0, -0.5, 0.0, 0.7, 1.5, 3.0}) {
        double g = std::exp(-0.25 * x * x);
        CHECK(parabolic_cylinder_int(0, x) == Catch::Approx(g));
        CHECK(parabolic_cylinder_int(1, x) == Catch::Approx(x * g));
        CHECK(parabolic_cylinder_int(2, x) ==
              Catch::Approx((x * x - 1.0) * g).margin(1e-15));
        CHECK(parabolic_cylinder_int(3, x) ==
              Catch::Approx(x * (x * x - 3.0) * g).margin(1e-14));
    }
    CHECK_THROWS_AS(parabolic_cylinder_int(-1, 0.0), DomainError);
}

TEST_CASE("negative-order cylinder function matches reference values") {
    Complex d10 = parabolic_cylinder_neg(Complex{1.0}, 0.0);
    CHECK(std::abs(d10 - 1.2533141373155003) < 1e-11);
    Complex d11 = parabolic_cylinder_neg(Complex{1.0}, 1.0);
    CHECK(std::abs(d11 - 0.51064374107966067) < 1e-11);
}

TEST_CASE("order -1 reduces to the erfc closed form") {
    // D_{-1}(x) = e^{x^2/4} sqrt(pi/2) erfc(x/sqrt 2)
    for (double x : {-1.5, -0.3, 0.0, 0.4, 1.0, 2.5}) {
        Complex got = parabolic_cylinder_neg(Complex{1.0}, x);
        double want = std::exp(0.25 * x * x) * std::sqrt(pi / 2.0) *
                      std::erfc(x / std::sqrt(2.0));
        CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, want));
    }
}

TEST_CASE("negative-order cylinder satisfies the order recurrence") {
    // D_{nu+1} = x D_nu - nu D_{nu-1} at nu = -s-1 reads
    //   D_{-s}(x) = x D_{-s-1}(x) + (s+1) D_{-s-2}(x),
    // which keeps every order inside the Re > 0 domain of the integral
    for (double s : {0.3, 0.5, 0.7, 1.4})
        for (double x : {0.2, 1.0, 2.0}) {
            Complex d0 = parabolic_cylinder_neg(Complex{s}, x);
            Complex d1 = parabolic_cylinder_neg(Complex{s + 1.0}, x);
            Complex d2 = parabolic_cylinder_neg(Complex{s + 2.0}, x);
            CHECK(std::abs(d0 - (x * d1 + (s + 1.0) * d2)) < 1e-9);
        }
}

TEST_CASE("negative-order cylinder rejects the left half plane") {
    CHECK_THROWS_AS(parabolic_cylinder_neg(Complex{0.0}, 1.0), DomainError);
    CHECK_THROWS_AS(parabolic_cylinder_neg(Complex{-0.5}, 1.0), DomainError);
}
