#ifndef PEARCEY_ODE_HPP
#define PEARCEY_ODE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "pearcey/errors.hpp"

namespace pearcey {

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double initial_step = 1e-4;
    double max_step = 0.1;
};

/// Dormand-Prince 5(4) embedded pair.  Advances y in place from t to t_target
/// (either direction), adapting the step from the embedded error estimate and
/// clipping the final step onto the target.  An optional per-step callback
/// sees each accepted state and may veto continuation by throwing.
template <std::size_t N>
void dopri5_integrate(const std::function<void(double, const std::array<double, N>&,
                                               std::array<double, N>&)>& rhs,
                      double& t, std::array<double, N>& y, double t_target,
                      const OdeOptions& opt = {},
                      const std::function<void(double, const std::array<double, N>&)>& on_step = {}) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = t_target >= t ? 1.0 : -1.0;
    if (t == t_target) return;
    double h = dir * std::min(opt.initial_step, opt.max_step);

    std::array<double, N> k1, k2, k3, k4, k5, k6, k7, yt, ynew;
    rhs(t, y, k1);

    int consecutive_underflow = 0;
    while (dir * (t_target - t) > 0.0) {
        if (dir * (t + h - t_target) > 0.0) h = t_target - t;

        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / N);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            if (on_step) on_step(t, y);
            consecutive_underflow = 0;
        }
        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        factor = std::min(5.0, std::max(0.2, factor));
        h *= factor;
        if (std::abs(h) > opt.max_step) h = dir * opt.max_step;
        if (std::abs(h) < 1e-14 * (1.0 + std::abs(t))) {
            if (++consecutive_underflow > 10)
                throw accuracy_error("dopri5: step size underflow", y[0], err);
            h = dir * 1e-13 * (1.0 + std::abs(t));
        }
    }
}

} // namespace pearcey

#endif
