#include "pearcey/kernels.hpp"

#include <cmath>
#include <numbers>

#include "pearcey/errors.hpp"

namespace pearcey {

namespace symbols {

namespace {
const double kTwoPiInv = 1.0 / (2.0 * std::numbers::pi);
}

SpectralSymbol quartic() {
    return {Polynomial::constant(1.0), Polynomial{{0.0, 0.0, 0.0, 0.0, -0.25}}, kTwoPiInv,
            "quartic"};
}

SpectralSymbol airy_cubic() {
    return {Polynomial::constant(1.0),
            Polynomial{{0.0, 0.0, 0.0, std::complex<double>(0.0, 1.0 / 3.0)}}, kTwoPiInv,
            "airy-cubic"};
}

SpectralSymbol shifted_cubic() {
    return {Polynomial::constant(1.0),
            Polynomial{{0.0, 0.0, -0.5, std::complex<double>(0.0, 1.0 / 3.0)}}, kTwoPiInv,
            "shifted-cubic"};
}

SpectralSymbol hermite_gauss() {
    return {Polynomial{{1.0, 0.0, -4.0}}, Polynomial{{0.0, 0.0, -1.0}}, kTwoPiInv,
            "hermite-gauss"};
}

SpectralSymbol airy_prime() {
    return {Polynomial{{0.0, std::complex<double>(0.0, 1.0)}},
            Polynomial{{0.0, 0.0, 0.0, std::complex<double>(0.0, 1.0 / 3.0)}}, kTwoPiInv,
            "airy-prime"};
}

SpectralSymbol linear(double b) {
    return {Polynomial{{b, std::complex<double>(0.0, -1.0)}}, Polynomial{{0.0}}, kTwoPiInv,
            "linear"};
}

} // namespace symbols

namespace {
const ExponentPolynomial& quartic_exponent() {
    static const ExponentPolynomial q{Polynomial{{0.0, 0.0, 0.0, 0.0, -0.25}}};
    return q;
}
} // namespace

double phi4(double x, const QuadratureSpec& spec) {
    const auto r = oscillatory_integral(Polynomial::constant(1.0), quartic_exponent(), x, spec);
    return r.value.real() / (2.0 * std::numbers::pi);
}

double phi4_series(double x, int order) {
    if (std::abs(x) > 6.0)
        throw domain_error("phi4_series: |x| > 6 outside the practical series range");
    if (order < 40)
        throw accuracy_error("phi4_series: order below 40", 0.0, 1.0);

    // Seeds from the Gamma closed forms: a0 = phi(0), a2 = phi''(0)/2.
    const double a0 = std::tgamma(0.25) / (2.0 * std::sqrt(2.0) * std::numbers::pi);
    const double phi2 = -std::sqrt(0.5) * std::tgamma(0.75) / std::numbers::pi;

    std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
    a[0] = a0;
    a[2] = 0.5 * phi2;
    // a_{k+3} = a_{k-1} / ((k+1)(k+2)(k+3)), from phi''' = x phi
    for (int k = 1; k + 3 <= order; ++k)
        a[k + 3] = a[k - 1] / (double(k + 1) * double(k + 2) * double(k + 3));

    double sum = 0.0, xp = 1.0, tail = 0.0;
    for (int k = 0; k <= order; ++k) {
        sum += a[k] * xp;
        if (k >= order - 3) tail += std::abs(a[k] * xp);
        xp *= x;
    }
    if (tail > 1e-12 * (1.0 + std::abs(sum)))
        throw accuracy_error("phi4_series: order too small for requested x", sum, tail);
    return sum;
}

double phi4_derivative(double x, unsigned j, const QuadratureSpec& spec) {
    if (j <= 2) {
        const auto r = oscillatory_integral(Polynomial::constant(1.0).times_i_lambda(j),
                                            quartic_exponent(), x, spec);
        return r.value.real() / (2.0 * std::numbers::pi);
    }
    if (j == 3) return x * phi4(x, spec);
    return double(j - 3) * phi4_derivative(x, j - 4, spec) + x * phi4_derivative(x, j - 3, spec);
}

namespace {

struct Bracket {
    double a, b;
};

double refine_zero(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, double tol) {
    // Bisect to width tol.
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa > 0) != (fm > 0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    // Secant polish, kept inside the bracket.
    double x0 = a, x1 = b, f0 = fa, f1 = fb;
    for (int it = 0; it < 8; ++it) {
        if (f1 == f0) break;
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 >= a && x2 <= b)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x2);
        if (std::abs(x1 - x0) < 1e-3 * tol) break;
    }
    return std::abs(f1) <= std::abs(f0) ? x1 : x0;
}

// Scan [a, b] left to right; near-tangent dips get a halved step.
void scan_interval(const std::function<double(double)>& f, double a, double b, double step,
                   double min_step, std::vector<Bracket>& out, std::size_t want) {
    double x = a, fx = f(a);
    while (x < b && out.size() < want) {
        const double xn = std::min(x + step, b);
        const double fn = f(xn);
        if ((fx > 0) != (fn > 0) || fn == 0.0) {
            out.push_back({x, xn});
        } else if (step > min_step && std::abs(fn) < 0.25 * std::abs(fx) &&
                   std::abs(f(std::min(xn + step, b))) > std::abs(fn)) {
            // local minimum of |f|: possible tangency or pair of close zeros
            scan_interval(f, x, std::min(xn + step, b), 0.5 * step, min_step, out, want);
        }
        x = xn;
        fx = fn;
    }
}

} // namespace

ZeroList find_zeros(const std::function<double(double)>& target, double lo, double hi,
                    std::size_t n, double tol, ScanDirection dir) {
    if (!(tol > 0.0) || !(hi > lo))
        throw domain_error("find_zeros: need hi > lo and tol > 0");

    const double initial_step = 0.1;
    const double min_step = std::max(10.0 * tol, 1e-12);

    std::function<double(double)> f = target;
    double a = lo, b = hi;
    if (dir == ScanDirection::descending) {
        // mirror: scan -hi .. -lo left to right
        f = [&target](double x) { return target(-x); };
        a = -hi;
        b = -lo;
    }

    std::vector<Bracket> brackets;
    scan_interval(f, a, b, initial_step, min_step, brackets, n);

    ZeroList zl;
    zl.achieved_tolerance = tol;
    for (const auto& br : brackets) {
        const double z = refine_zero(f, br.a, br.b, f(br.a), f(br.b), tol);
        const double zeta = dir == ScanDirection::descending ? -z : z;
        if (!zl.values.empty() && std::abs(zeta - zl.values.back()) <= 10.0 * tol) continue;
        zl.values.push_back(zeta);
    }
    if (zl.values.size() < n)
        throw not_found_error("find_zeros: located " + std::to_string(zl.values.size()) +
                                  " of " + std::to_string(n) + " requested zeros",
                              zl.values);
    zl.values.resize(n);
    return zl;
}

} // namespace pearcey
