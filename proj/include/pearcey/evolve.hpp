#ifndef PEARCEY_EVOLVE_HPP
#define PEARCEY_EVOLVE_HPP

#include <functional>
#include <optional>
#include <string>

#include "pearcey/kernels.hpp"

namespace pearcey {

/// A spectral symbol evolved by the heat semigroup: v(t,x) = normalization *
/// Int prefactor(l) exp(i l x - l^2 t/2 + exponent(l)) dl.  Closed forms, when
/// registered, act as interchangeable evaluations of the same kernel.
class EvolvedKernel {
public:
    explicit EvolvedKernel(SpectralSymbol symbol, QuadratureSpec spec = {});

    /// v(t, x).  Quadrature by default; an undamped symbol at t = 0 routes to
    /// the registered closed form, or throws domain_error if there is none.
    double value(double t, double x) const;

    /// n-th x-derivative (n <= 4) via the (i lambda)^n moment prefactor.
    double derivative(double t, double x, unsigned n) const;

    const SpectralSymbol& symbol() const { return symbol_; }
    const QuadratureSpec& spec() const { return spec_; }

    bool has_closed_form() const { return static_cast<bool>(closed_form_); }
    double closed_form(double t, double x) const;
    /// Evaluate the closed form instead of quadrature in value().
    void prefer_closed_form(bool on) { prefer_closed_ = on; }

    void set_closed_form(std::function<double(double, double)> f) { closed_form_ = std::move(f); }

private:
    SpectralSymbol symbol_;
    QuadratureSpec spec_;
    std::function<double(double, double)> closed_form_;
    bool prefer_closed_ = false;
};

/// exp(t x/2 + t^3/12) Ai(x + t^2/4): the heat-evolved classical Airy kernel.
double airy3_closed_form(double t, double x);

/// Gaussian-moment form of the heat-evolved (x^2-1) exp(-x^2/4) kernel,
/// sigma = t + 2.
double hermite_closed_form(double t, double x);

/// x/sqrt(2 pi t^3) e^{-x^2/2t} + b/sqrt(2 pi t) e^{-x^2/2t}; zero at x = -bt.
double linear_boundary_closed_form(double t, double x, double b);

/// Built-in kernels by name: pearcey, airy3, airy3-closed, shifted, hermite,
/// hermite-closed, airy-prime, linear (the latter takes slope b).
EvolvedKernel make_kernel(const std::string& name, double param = 0.0,
                          QuadratureSpec spec = {});

} // namespace pearcey

#endif
