#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pearcey/errors.hpp"
#include "pearcey/kernels.hpp"

using namespace pearcey;

TEST_CASE("phi(0): Gamma closed form") {
    const double expect = std::tgamma(0.25) / (2.0 * std::sqrt(2.0) * std::numbers::pi);
    CHECK(phi4(0.0) == doctest::Approx(expect).epsilon(1e-13));
    CHECK(phi4_series(0.0) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("phi''(0): moment integral equals the Gamma closed form") {
    const double expect = -std::sqrt(0.5) * std::tgamma(0.75) / std::numbers::pi;
    CHECK(phi4_derivative(0.0, 2) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("phi is even and vanishes near +-2.44197") {
    for (double x : {0.3, 1.1, 2.0, 3.7, 5.2})
        CHECK(std::abs(phi4(x) - phi4(-x)) < 1e-12);
    CHECK(std::abs(phi4(2.44197)) < 1e-5);
    CHECK(std::abs(phi4(-2.44197)) < 1e-5);
    CHECK(std::abs(phi4_series(2.44197)) < 1e-6);
}

TEST_CASE("quadrature and series routes agree on |x| <= 4") {
    for (double x = -4.0; x <= 4.0; x += 0.5)
        CHECK(std::abs(phi4(x) - phi4_series(x)) < 1e-9);
}

TEST_CASE("phi4_series rejects out-of-range requests") {
    CHECK_THROWS_AS(phi4_series(6.5), domain_error);
    CHECK_THROWS_AS(phi4_series(1.0, 39), accuracy_error);
    // an order too small for large x reports the partial sum
    try {
        phi4_series(5.9, 48);
        FAIL("expected accuracy_error");
    } catch (const accuracy_error& e) {
        CHECK(e.error_estimate > 0.0);
    }
}

TEST_CASE("phi derivatives: parity and the third-derivative identity") {
    CHECK(std::abs(phi4_derivative(0.0, 1)) < 1e-13);
    for (double x : {-2.0, 0.7, 3.1})
        CHECK(phi4_derivative(x, 3) == doctest::Approx(x * phi4(x)).epsilon(1e-12));
    // at j = 4 the recurrence reduces to phi + x phi'
    CHECK(phi4_derivative(0.0, 4) == doctest::Approx(phi4(0.0)).epsilon(1e-12));
}

TEST_CASE("derivative recurrence equals moment quadrature for j in 4..6") {
    // independent path: direct (i lambda)^j moment under the quartic exponent
    const ExponentPolynomial q{Polynomial{{0.0, 0.0, 0.0, 0.0, -0.25}}};
    for (unsigned j : {4u, 5u, 6u})
        for (double x : {-4.0, -1.5, 0.0, 2.44197, 4.0}) {
            const auto m = oscillatory_integral(Polynomial::constant(1.0).times_i_lambda(j), q, x);
            const double moment = m.value.real() / (2.0 * std::numbers::pi);
            CHECK(std::abs(phi4_derivative(x, j) - moment) < 1e-8);
        }
}

TEST_CASE("built-in symbols are Hermitian") {
    CHECK(symbols::quartic().is_hermitian());
    CHECK(symbols::airy_cubic().is_hermitian());
    CHECK(symbols::shifted_cubic().is_hermitian());
    CHECK(symbols::hermite_gauss().is_hermitian());
    CHECK(symbols::airy_prime().is_hermitian());
    CHECK(symbols::linear(1.7).is_hermitian());
}

TEST_CASE("find_zeros: polynomial root") {
    auto zl = find_zeros([](double x) { return x * x - 1.0; }, 0.0, 3.0, 1);
    CHECK(zl.values[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("find_zeros: first zeros of phi") {
    auto zl = find_zeros([](double x) { return phi4(x); }, 0.1, 10.0, 2, 1e-10);
    REQUIRE(zl.values.size() == 2);
    CHECK(zl.values[0] == doctest::Approx(2.44197).epsilon(1e-4));
    CHECK(zl.values[0] < zl.values[1]);
    // sign-change certificate for each zero
    for (double z : zl.values) {
        const double t = zl.achieved_tolerance;
        CHECK(phi4(z - t) * phi4(z + t) <= 0.0);
    }
    // consecutive zeros well separated
    CHECK(zl.values[1] - zl.values[0] > 10.0 * zl.achieved_tolerance);
}

TEST_CASE("find_zeros: too few sign changes reports the partial list") {
    try {
        find_zeros([](double x) { return x * x - 1.0; }, 0.0, 3.0, 3);
        FAIL("expected not_found_error");
    } catch (const not_found_error& e) {
        REQUIRE(e.found.size() == 1);
        CHECK(e.found[0] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("find_zeros: argument validation") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(find_zeros(f, 1.0, 0.0, 1), domain_error);
    CHECK_THROWS_AS(find_zeros(f, 0.0, 1.0, 1, 0.0), domain_error);
}

TEST_CASE("find_zeros: descending scan returns the zero closest to hi first") {
    // a function with zeros at -1 and -2: descending from 0 must find -1 first
    auto zl = find_zeros([](double x) { return (x + 1.0) * (x + 2.0); }, -5.0, 0.0, 1, 1e-10,
                         ScanDirection::descending);
    CHECK(zl.values[0] == doctest::Approx(-1.0).epsilon(1e-9));
}
