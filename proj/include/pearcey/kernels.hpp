#ifndef PEARCEY_KERNELS_HPP
#define PEARCEY_KERNELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "pearcey/quadrature.hpp"

namespace pearcey {

/// Fourier-domain symbol of an initial kernel: prefactor(lambda) *
/// exp(exponent(lambda)), scaled by `normalization` after integration.
/// Hermitian symmetry of the pair guarantees every evolved value is real.
struct SpectralSymbol {
    Polynomial prefactor;
    Polynomial exponent;  ///< validated against ExponentPolynomial once combined with heat damping
    double normalization;
    std::string name;

    bool is_hermitian(double tol = 1e-12) const {
        return prefactor.is_hermitian(tol) && exponent.is_hermitian(tol);
    }
};

namespace symbols {
SpectralSymbol quartic();        ///< exp(-lambda^4/4), the order-4 Airy kernel
SpectralSymbol airy_cubic();     ///< exp(i lambda^3/3), classical Ai
SpectralSymbol shifted_cubic();  ///< exp(i lambda^3/3 - lambda^2/2)
SpectralSymbol hermite_gauss();  ///< (1 - 4 lambda^2) exp(-lambda^2)
SpectralSymbol airy_prime();     ///< i lambda exp(i lambda^3/3), Ai'
SpectralSymbol linear(double b); ///< (b - i lambda), pure heat kernel combination
} // namespace symbols

/// Order-4 Airy function phi(x) = (1/2pi) Int exp(i lambda x - lambda^4/4).
double phi4(double x, const QuadratureSpec& spec = {});

/// Same function by its Maclaurin series (phi''' = x phi recurrence); the
/// independent route used to cross-check the quadrature path.
double phi4_series(double x, int order = 120);

/// j-th derivative of phi: moment quadrature for j <= 2, x phi(x) at j = 3,
/// the ODE recurrence phi^(j) = (j-3) phi^(j-4) + x phi^(j-3) above.
double phi4_derivative(double x, unsigned j, const QuadratureSpec& spec = {});

enum class ScanDirection { ascending, descending };

struct ZeroList {
    std::vector<double> values;
    double achieved_tolerance;
};

/// First n zeros of `target` inside [lo, hi], scanning with an adaptive step
/// (0.1 initially, halved near suspected tangencies), refined by bisection
/// and polished with secant steps.  Throws not_found_error with the partial
/// list when fewer than n sign changes exist.
ZeroList find_zeros(const std::function<double(double)>& target, double lo, double hi,
                    std::size_t n, double tol = 1e-10,
                    ScanDirection dir = ScanDirection::ascending);

} // namespace pearcey

#endif
