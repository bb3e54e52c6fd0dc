#include "pearcey/evolve.hpp"

#include <cmath>
#include <numbers>

#include "pearcey/airy.hpp"
#include "pearcey/errors.hpp"

namespace pearcey {

EvolvedKernel::EvolvedKernel(SpectralSymbol symbol, QuadratureSpec spec)
    : symbol_(std::move(symbol)), spec_(spec) {
    if (!symbol_.is_hermitian())
        throw invalid_kernel_error("symbol is not Hermitian-symmetric; v would be complex");
}

double EvolvedKernel::closed_form(double t, double x) const {
    if (!closed_form_)
        throw domain_error("kernel '" + symbol_.name + "' has no registered closed form");
    return closed_form_(t, x);
}

double EvolvedKernel::value(double t, double x) const {
    if (t < 0.0)
        throw domain_error("v(t,x) requires t >= 0");
    if (prefer_closed_ && closed_form_) return closed_form_(t, x);
    std::optional<ExponentPolynomial> q;
    try {
        q.emplace(symbol_.exponent + Polynomial{{0.0, 0.0, -0.5 * t}});
    } catch (const invalid_kernel_error&) {
        if (closed_form_) return closed_form_(t, x);
        throw domain_error("symbol '" + symbol_.name +
                           "' is undamped at t = 0 and has no closed form");
    }
    const auto r = oscillatory_integral(symbol_.prefactor, *q, x, spec_);
    const double re = r.value.real();
    if (std::abs(r.value.imag()) > 1e-10 * (1.0 + std::abs(re)))
        throw accuracy_error("imaginary residue above tolerance for a Hermitian symbol", re,
                             std::abs(r.value.imag()));
    return symbol_.normalization * re;
}

double EvolvedKernel::derivative(double t, double x, unsigned n) const {
    if (n > 4)
        throw domain_error("derivative order above 4 is not supported");
    if (n == 0) return value(t, x);
    if (t < 0.0)
        throw domain_error("v derivative requires t >= 0");
    std::optional<ExponentPolynomial> q;
    try {
        q.emplace(symbol_.exponent + Polynomial{{0.0, 0.0, -0.5 * t}});
    } catch (const invalid_kernel_error&) {
        throw domain_error("derivative of undamped symbol '" + symbol_.name +
                           "' needs t > 0");
    }
    const auto r = oscillatory_integral(symbol_.prefactor.times_i_lambda(n), *q, x, spec_);
    return symbol_.normalization * r.value.real();
}

double airy3_closed_form(double t, double x) {
    if (t < 0.0)
        throw domain_error("airy3_closed_form requires t >= 0");
    const double e = 0.5 * t * x + t * t * t / 12.0;
    if (e > 700.0)
        throw range_error("airy3_closed_form: exponent overflows double range");
    return std::exp(e) * airy_ai(x + 0.25 * t * t);
}

double hermite_closed_form(double t, double x) {
    if (t < 0.0)
        throw domain_error("hermite_closed_form requires t >= 0");
    const double s = t + 2.0;
    return (1.0 - 4.0 / s + 4.0 * x * x / (s * s)) * std::exp(-x * x / (2.0 * s)) /
           std::sqrt(2.0 * std::numbers::pi * s);
}

double linear_boundary_closed_form(double t, double x, double b) {
    if (!(t > 0.0))
        throw domain_error("linear_boundary_closed_form requires t > 0");
    const double g = std::exp(-x * x / (2.0 * t));
    return x / std::sqrt(2.0 * std::numbers::pi * t * t * t) * g +
           b / std::sqrt(2.0 * std::numbers::pi * t) * g;
}

EvolvedKernel make_kernel(const std::string& name, double param, QuadratureSpec spec) {
    if (name == "pearcey" || name == "quartic")
        return EvolvedKernel(symbols::quartic(), spec);
    if (name == "airy3" || name == "airy3-closed") {
        EvolvedKernel k(symbols::airy_cubic(), spec);
        k.set_closed_form(airy3_closed_form);
        k.prefer_closed_form(name == "airy3-closed");
        return k;
    }
    if (name == "shifted")
        return EvolvedKernel(symbols::shifted_cubic(), spec);
    if (name == "hermite" || name == "hermite-closed") {
        EvolvedKernel k(symbols::hermite_gauss(), spec);
        k.set_closed_form(hermite_closed_form);
        k.prefer_closed_form(name == "hermite-closed");
        return k;
    }
    if (name == "airy-prime") {
        EvolvedKernel k(symbols::airy_prime(), spec);
        k.set_closed_form([](double t, double x) {
            return std::exp(0.5 * t * x + t * t * t / 12.0) *
                   (0.5 * t * airy_ai(x + 0.25 * t * t) + airy_ai_prime(x + 0.25 * t * t));
        });
        return k;
    }
    if (name == "linear") {
        EvolvedKernel k(symbols::linear(param), spec);
        k.set_closed_form([param](double t, double x) {
            return linear_boundary_closed_form(t, x, param);
        });
        return k;
    }
    throw domain_error("unknown kernel '" + name + "'");
}

} // namespace pearcey
