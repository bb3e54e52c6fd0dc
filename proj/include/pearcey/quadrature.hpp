#ifndef PEARCEY_QUADRATURE_HPP
#define PEARCEY_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "pearcey/polynomial.hpp"

namespace pearcey {

/// Exponent q(lambda) of an integrand p(lambda) exp(q(lambda) + i lambda x).
/// The highest power carrying a nonzero real part must be even with a strictly
/// negative coefficient, so the integrand decays at both infinities.
class ExponentPolynomial {
public:
    explicit ExponentPolynomial(Polynomial q);

    const Polynomial& poly() const { return poly_; }
    double real_part(double z) const { return poly_.real_part(z); }

    /// Degree of the highest term with nonzero real part.
    std::size_t decay_degree() const { return decay_degree_; }

    bool is_hermitian(double tol = 1e-14) const { return poly_.is_hermitian(tol); }

    /// Add a heat damping term -lambda^2 t/2.  Throws invalid_kernel_error if
    /// the combined exponent fails to decay (e.g. a pure cubic phase at t = 0).
    ExponentPolynomial with_heat_term(double t) const;

private:
    Polynomial poly_;
    std::size_t decay_degree_;
};

struct QuadratureSpec {
    double truncation_tolerance = 1e-16;
    double node_density = 8.0;   ///< nodes per oscillation period
    std::size_t max_nodes = 200000;
    unsigned panel_order = 16;   ///< Gauss-Legendre points per panel
};

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate;       ///< from half-density comparison
    std::size_t nodes_used;
};

/// Smallest radius R (inflated by 10%) with Re q(z) <= log_tol for |z| >= R,
/// found by bisection on the monotone tail of Re q.
double truncation_radius_log(const ExponentPolynomial& q, double log_tol);
double truncation_radius(const ExponentPolynomial& q, double tol);

/// Integral of p(z) exp(q(z) + i z x) over the real line, truncated at the
/// decay radius and evaluated by composite Gauss-Legendre panels whose width
/// resolves the oscillation from both x and the imaginary part of q.
QuadratureResult oscillatory_integral(const Polynomial& p, const ExponentPolynomial& q,
                                      double x, const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace pearcey

#endif
