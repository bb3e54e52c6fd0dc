#include "pearcey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pearcey/errors.hpp"

namespace pearcey {

ExponentPolynomial::ExponentPolynomial(Polynomial q) : poly_(std::move(q)) {
    if (poly_.degree() > 4)
        throw invalid_kernel_error("exponent degree above 4 is not supported");
    const auto& c = poly_.coefficients();
    std::size_t d = c.size();
    while (d > 0 && c[d - 1].real() == 0.0) --d;
    if (d == 0)
        throw invalid_kernel_error("exponent has no decaying real part");
    decay_degree_ = d - 1;
    if (decay_degree_ == 0 || decay_degree_ % 2 != 0 || c[decay_degree_].real() >= 0.0)
        throw invalid_kernel_error(
            "leading real coefficient of the exponent must be negative and of even degree");
}

ExponentPolynomial ExponentPolynomial::with_heat_term(double t) const {
    auto c = poly_.coefficients();
    if (c.size() < 3) c.resize(3, 0.0);
    c[2] -= 0.5 * t;
    return ExponentPolynomial(Polynomial(std::move(c)));
}

namespace {

// Last stationary point of r -> Re q(sign * r) on r >= 0; beyond it the tail
// is monotone decreasing (negative even-degree leading term).  The derivative
// has degree <= 3, so a scan over its Cauchy root bound cannot miss a crossing
// that matters for monotonicity.
double monotone_tail_start(const Polynomial& q, double sign) {
    const auto& c = q.coefficients();
    std::size_t d = c.size();
    while (d > 0 && c[d - 1].real() == 0.0) --d;
    --d;  // decay degree, >= 2 by the class invariant

    std::vector<double> dq(d);  // coefficients of (d/dr) Re q(sign r)
    double s = sign;
    for (std::size_t k = 1; k <= d; ++k, s *= sign)
        dq[k - 1] = static_cast<double>(k) * c[k].real() * s;

    double bound = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) bound = std::max(bound, std::abs(dq[k] / dq[d - 1]));
    bound += 1.0;

    const auto deriv = [&](double r) {
        double acc = 0.0;
        for (std::size_t k = d; k-- > 0;) acc = acc * r + dq[k];
        return acc;
    };

    double last = 0.0;
    const int n_scan = 512;
    double prev = deriv(0.0);
    for (int i = 1; i <= n_scan; ++i) {
        const double r = bound * i / n_scan;
        const double cur = deriv(r);
        if ((prev > 0) != (cur > 0)) {
            double a = bound * (i - 1) / n_scan, b = r;
            for (int it = 0; it < 60; ++it) {
                const double m = 0.5 * (a + b);
                ((deriv(a) > 0) != (deriv(m) > 0) ? b : a) = m;
            }
            last = 0.5 * (a + b);
        }
        prev = cur;
    }
    return last;
}

double side_radius(const ExponentPolynomial& q, double log_tol, double sign) {
    const double tail = monotone_tail_start(q.poly(), sign);
    double hi = std::max(1.0, tail);
    int guard = 0;
    while (q.real_part(sign * hi) > log_tol) {
        hi *= 2.0;
        if (++guard > 200)
            throw invalid_kernel_error("exponent decays too slowly for the requested tolerance");
    }
    // Smallest r >= tail with Re q(sign*r) <= log_tol; the predicate is
    // monotone in r on the tail.
    double lo = tail;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (q.real_part(sign * mid) <= log_tol ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

double truncation_radius_log(const ExponentPolynomial& q, double log_tol) {
    if (!(log_tol < 0.0))
        throw domain_error("truncation tolerance must be below 1");
    const double r = std::max(side_radius(q, log_tol, +1.0), side_radius(q, log_tol, -1.0));
    return 1.1 * r;
}

double truncation_radius(const ExponentPolynomial& q, double tol) {
    if (!(tol > 0.0))
        throw domain_error("truncation tolerance must be positive");
    return truncation_radius_log(q, std::log(tol));
}

void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-based initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (unsigned j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

std::complex<double> panel_sum(const Polynomial& p, const Polynomial& q, double x,
                               double lam_max, std::size_t n_panels,
                               const std::vector<double>& gl_x, const std::vector<double>& gl_w) {
    const double width = 2.0 * lam_max / static_cast<double>(n_panels);
    std::complex<double> sum = 0.0, comp = 0.0;  // Kahan compensation
    for (std::size_t ip = 0; ip < n_panels; ++ip) {
        const double a = -lam_max + width * static_cast<double>(ip);
        const double c = a + 0.5 * width, h = 0.5 * width;
        for (std::size_t j = 0; j < gl_x.size(); ++j) {
            const double z = c + h * gl_x[j];
            const std::complex<double> e = q(z) + std::complex<double>(0.0, z * x);
            const std::complex<double> term = gl_w[j] * h * p(z) * std::exp(e);
            const std::complex<double> y = term - comp;
            const std::complex<double> t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

} // namespace

QuadratureResult oscillatory_integral(const Polynomial& p, const ExponentPolynomial& q,
                                      double x, const QuadratureSpec& spec) {
    if (!(spec.truncation_tolerance > 0.0) || spec.node_density < 2.0 ||
        spec.panel_order < 2)
        throw domain_error("invalid quadrature spec");

    const double lam_max = truncation_radius(q, spec.truncation_tolerance);

    // Peak local frequency of the phase x*z + Im q(z) over the window.
    const auto& qc = q.poly().coefficients();
    double omega = std::abs(x);
    for (std::size_t k = 1; k < qc.size(); ++k)
        omega += static_cast<double>(k) * std::abs(qc[k].imag()) * std::pow(lam_max, double(k - 1));

    // Panels narrow enough that each sees a fraction of one oscillation, with
    // a density-scaled node target and a degree-driven floor on top.
    const double periods = omega * lam_max / std::numbers::pi;
    const double node_target = std::max({32.0, periods * spec.node_density,
                                         8.0 * static_cast<double>(q.poly().degree() + p.degree())});
    std::size_t n_panels = static_cast<std::size_t>(
        std::ceil(std::max(2.0 * lam_max / (std::numbers::pi / (2.0 * std::max(omega, 1.0))),
                           node_target / spec.panel_order)));
    n_panels = std::max<std::size_t>(n_panels, 4);

    bool budget_ok = true;
    if (n_panels * spec.panel_order > spec.max_nodes) {
        n_panels = std::max<std::size_t>(spec.max_nodes / spec.panel_order, 2);
        budget_ok = false;
    }

    std::vector<double> gl_x, gl_w;
    gauss_legendre(spec.panel_order, gl_x, gl_w);

    const std::complex<double> full = panel_sum(p, q.poly(), x, lam_max, n_panels, gl_x, gl_w);
    const std::complex<double> half =
        panel_sum(p, q.poly(), x, lam_max, std::max<std::size_t>(n_panels / 2, 1), gl_x, gl_w);
    const double err = std::abs(full - half);

    if (!budget_ok)
        throw accuracy_error("node budget exceeded", full.real(), err);
    return {full, err, n_panels * spec.panel_order};
}

} // namespace pearcey
