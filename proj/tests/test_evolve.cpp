#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pearcey/errors.hpp"
#include "pearcey/evolve.hpp"
#include "pearcey/airy.hpp"

using namespace pearcey;

TEST_CASE("quartic kernel reduces to phi at t = 0") {
    const auto k = make_kernel("pearcey");
    CHECK(k.value(0.0, 0.0) == doctest::Approx(phi4(0.0)).epsilon(1e-14));
    CHECK(std::abs(k.value(0.0, 2.44197)) < 1e-5);
    CHECK(k.derivative(0.0, 1.3, 0) == k.value(0.0, 1.3));
    CHECK(std::abs(k.derivative(0.0, 0.0, 1)) < 1e-13);
}

TEST_CASE("argument validation") {
    const auto k = make_kernel("pearcey");
    CHECK_THROWS_AS(k.value(-0.1, 0.0), domain_error);
    CHECK_THROWS_AS(k.derivative(1.0, 0.0, 5), domain_error);
    CHECK_THROWS_AS(make_kernel("no-such-kernel"), domain_error);
    // a non-Hermitian symbol cannot produce a real v
    SpectralSymbol bad{Polynomial{{std::complex<double>(0.0, 1.0)}},
                       Polynomial{{0.0, 0.0, -0.5}}, 1.0, "bad"};
    CHECK_THROWS_AS(EvolvedKernel{bad}, invalid_kernel_error);
}

TEST_CASE("evenness in x for even symbols") {
    for (const char* name : {"pearcey", "hermite"}) {
        const auto k = make_kernel(name);
        for (double t : {0.0, 0.8, 2.5})
            for (double x : {0.4, 1.9, 3.3})
                CHECK(std::abs(k.value(t, x) - k.value(t, -x)) < 1e-12);
    }
}

TEST_CASE("heat semigroup contracts the sup norm (quartic)") {
    const auto k = make_kernel("pearcey");
    double prev = 1e300;
    for (double t : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        double sup = 0.0;
        for (double x = -6.0; x <= 6.0; x += 0.25) sup = std::max(sup, std::abs(k.value(t, x)));
        CHECK(sup <= prev + 1e-12);
        prev = sup;
    }
}

TEST_CASE("AiryCubic: quadrature matches the closed form") {
    const auto k = make_kernel("airy3");
    REQUIRE(k.has_closed_form());
    for (double t : {0.4, 1.2, 2.8, 4.0})
        for (double x : {-4.0, -1.3, 0.0, 2.1, 4.0}) {
            const double cf = airy3_closed_form(t, x);
            CHECK(std::abs(k.value(t, x) - cf) < 1e-8 * std::max(1.0, std::abs(cf)));
        }
}

TEST_CASE("AiryCubic at t = 0 routes to Ai itself") {
    const auto k = make_kernel("airy3");
    // the undamped cubic phase cannot be integrated; the closed form takes over
    CHECK(k.value(0.0, -1.0) == doctest::Approx(airy_ai(-1.0)).epsilon(1e-13));
    CHECK(airy3_closed_form(0.0, 0.5) == doctest::Approx(airy_ai(0.5)).epsilon(1e-14));
    // derivatives have no closed-form fallback
    CHECK_THROWS_AS(k.derivative(0.0, 0.0, 1), domain_error);
}

TEST_CASE("AiryCubic boundary C - t^2/4 zeroes the kernel") {
    const double C = -2.338107410459767;  // first zero of Ai
    CHECK(std::abs(airy3_closed_form(2.0, C - 1.0)) < 1e-14);
    CHECK(std::abs(airy3_closed_form(2.0, -3.33811)) < 1e-5);
}

TEST_CASE("ShiftedCubic equals AiryCubic advanced by one time unit") {
    const auto k = make_kernel("shifted");
    for (double t : {0.0, 0.7, 2.0, 3.5})
        for (double x : {-3.0, -1.0, 0.6}) {
            const double cf = airy3_closed_form(t + 1.0, x);
            CHECK(std::abs(k.value(t, x) - cf) < 1e-8 * std::max(1.0, std::abs(cf)));
        }
    CHECK(std::abs(k.value(0.0, -2.58811)) < 1e-5);
}

TEST_CASE("HermiteGauss: quadrature matches the Gaussian-moment closed form") {
    const auto k = make_kernel("hermite");
    REQUIRE(k.has_closed_form());
    for (double t : {0.0, 1.0, 2.0, 3.7})
        for (double x : {-2.5, 0.0, 0.9, 2.0})
            CHECK(k.value(t, x) ==
                  doctest::Approx(hermite_closed_form(t, x)).epsilon(1e-10).scale(1.0));
    // position kernel (x^2-1)e^{-x^2/4}: zero at x = 1, negative at the origin
    CHECK(std::abs(hermite_closed_form(0.0, 1.0)) < 1e-15);
    CHECK(hermite_closed_form(0.0, 0.0) < 0.0);
    // double zero where the two branches merge
    CHECK(std::abs(hermite_closed_form(2.0, 0.0)) < 1e-12);
}

TEST_CASE("preferring the closed form changes the route, not the value") {
    const auto quad = make_kernel("hermite");
    const auto closed = make_kernel("hermite-closed");
    CHECK(std::abs(quad.value(1.5, 0.7) - closed.value(1.5, 0.7)) < 1e-10);
}

TEST_CASE("Ai' kernel: quadrature matches its registered closed form") {
    const auto k = make_kernel("airy-prime");
    for (double t : {0.5, 1.5, 3.0})
        for (double x : {-2.0, -0.5, 1.0}) {
            const double cf = k.closed_form(t, x);
            CHECK(std::abs(k.value(t, x) - cf) < 1e-9 * std::max(1.0, std::abs(cf)));
        }
}

TEST_CASE("linear kernel: zero exactly on x = -bt") {
    const double b = 0.8;
    const auto k = make_kernel("linear", b);
    for (double t : {0.5, 1.0, 2.7}) CHECK(std::abs(k.value(t, -b * t)) < 1e-13);
    // t = 1, x = a - b closed form: a e^{-(a-b)^2/2} / sqrt(2 pi)
    const double a = 1.0;
    const double expect = a / std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * (a - b) * (a - b));
    CHECK(linear_boundary_closed_form(1.0, a - b, b) == doctest::Approx(expect).epsilon(1e-13));
    CHECK(std::abs(linear_boundary_closed_form(1.0, 0.0, 0.0)) < 1e-300);
    CHECK_THROWS_AS(linear_boundary_closed_form(0.0, 1.0, b), domain_error);
}

TEST_CASE("closed-form overflow guard") {
    CHECK_THROWS_AS(airy3_closed_form(100.0, 10.0), range_error);
}
