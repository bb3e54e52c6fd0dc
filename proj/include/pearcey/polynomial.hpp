#ifndef PEARCEY_POLYNOMIAL_HPP
#define PEARCEY_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pearcey {

/// Dense polynomial with complex coefficients, c[0] + c[1] z + ... + c[d] z^d.
class Polynomial {
public:
    Polynomial() : coeff_{0.0} {}
    Polynomial(std::initializer_list<std::complex<double>> c) : coeff_(c) { trim(); }
    explicit Polynomial(std::vector<std::complex<double>> c) : coeff_(std::move(c)) { trim(); }

    static Polynomial constant(std::complex<double> c) { return Polynomial{{c}}; }

    std::size_t degree() const { return coeff_.size() - 1; }
    const std::vector<std::complex<double>>& coefficients() const { return coeff_; }

    std::complex<double> operator()(double z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t k = coeff_.size(); k-- > 0;)
            acc = acc * z + coeff_[k];
        return acc;
    }

    /// Real part of p(z), used for decay estimates of exponents.
    double real_part(double z) const {
        double acc = 0.0;
        for (std::size_t k = coeff_.size(); k-- > 0;)
            acc = acc * z + coeff_[k].real();
        return acc;
    }

    Polynomial operator+(const Polynomial& other) const {
        std::vector<std::complex<double>> c(std::max(coeff_.size(), other.coeff_.size()), 0.0);
        for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] += coeff_[k];
        for (std::size_t k = 0; k < other.coeff_.size(); ++k) c[k] += other.coeff_[k];
        return Polynomial(std::move(c));
    }

    /// Multiply by (i z)^n.  Moment prefactors for spectral x-derivatives.
    Polynomial times_i_lambda(unsigned n) const {
        static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        std::vector<std::complex<double>> c(coeff_.size() + n, 0.0);
        for (std::size_t k = 0; k < coeff_.size(); ++k)
            c[k + n] = coeff_[k] * ipow[n % 4];
        return Polynomial(std::move(c));
    }

    /// True when p(-z) = conj(p(z)): even coefficients real, odd ones imaginary.
    bool is_hermitian(double tol = 1e-14) const {
        for (std::size_t k = 0; k < coeff_.size(); ++k) {
            const double bad = (k % 2 == 0) ? std::abs(coeff_[k].imag())
                                            : std::abs(coeff_[k].real());
            if (bad > tol * (1.0 + std::abs(coeff_[k]))) return false;
        }
        return true;
    }

private:
    void trim() {
        while (coeff_.size() > 1 && std::abs(coeff_.back()) == 0.0) coeff_.pop_back();
        if (coeff_.empty()) coeff_.push_back(0.0);
    }
    std::vector<std::complex<double>> coeff_;
};

} // namespace pearcey

#endif
