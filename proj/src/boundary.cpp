#include "pearcey/boundary.hpp"

#include <cmath>

namespace pearcey {

double rayleigh_rhs(const RayleighState& s) {
    return 2.0 * s.f_prime * s.f_prime * s.f_prime - 0.5 * s.t * s.f_prime - 0.25 * s.f;
}

double initial_slope(double xi, const QuadratureSpec& spec) {
    const double d1 = phi4_derivative(xi, 1, spec);
    const double d2 = phi4_derivative(xi, 2, spec);
    if (std::abs(d1) < 1e-8 * std::abs(d2))
        throw double_zero_error("initial_slope: phi'(xi) vanishes; xi looks like a double zero");
    return -d2 / (2.0 * d1);
}

double slope_from_v(double t, double f, const EvolvedKernel& kernel) {
    const double d1 = kernel.derivative(t, f, 1);
    const double d2 = kernel.derivative(t, f, 2);
    // The heat factor makes v and all its x-derivatives decay together, so the
    // double-zero test has to be relative to the local derivative scale.
    if (std::abs(d1) < 1e-8 * std::abs(d2))
        throw double_zero_error("slope_from_v: v'(t,f) vanishes; double zero of v(t,.)");
    return -d2 / (2.0 * d1);
}

namespace {

using State2 = std::array<double, 2>;

void rayleigh_ode(double t, const State2& y, State2& dy) {
    dy[0] = y[1];
    dy[1] = rayleigh_rhs({t, y[0], y[1]});
}

// Newton refinement of a zero of v(t, .), at most `iters` steps.
double newton_on_v(const EvolvedKernel& kernel, double t, double x0, int iters = 5) {
    double x = x0;
    for (int i = 0; i < iters; ++i) {
        const double val = kernel.value(t, x);
        const double der = kernel.derivative(t, x, 1);
        if (std::abs(der) < 1e-300) break;
        const double dx = val / der;
        x -= dx;
        if (std::abs(dx) < 1e-13 * (1.0 + std::abs(x))) break;
    }
    return x;
}

BoundaryTrajectory trace_second_order(const EvolvedKernel* kernel, double t0, State2 y0,
                                      double t_end, const TraceOptions& opts,
                                      TraceMethod method) {
    BoundaryTrajectory traj;
    traj.method = method;

    const double dir = t_end >= t0 ? 1.0 : -1.0;
    const std::size_t n_out =
        static_cast<std::size_t>(std::llround(std::abs(t_end - t0) / opts.dt_out));

    double t = t0;
    State2 y = y0;
    traj.samples.push_back({t, y[0], y[1]});

    std::function<void(double, const State2&, State2&)> rhs = rayleigh_ode;
    std::size_t since_projection = 0;
    for (std::size_t i = 1; i <= n_out; ++i) {
        const double tn = t0 + dir * opts.dt_out * static_cast<double>(i);
        try {
            dopri5_integrate<2>(rhs, t, y, tn, opts.ode,
                                [&](double, const State2& s) {
                                    if (std::abs(s[1]) > opts.slope_cap)
                                        throw blow_up_error("slope cap exceeded", traj);
                                });
        } catch (const accuracy_error&) {
            throw blow_up_error("step size underflow during trace", traj);
        }
        bool projected = false;
        if (opts.project_every > 0 && kernel && ++since_projection >= opts.project_every) {
            since_projection = 0;
            y[0] = newton_on_v(*kernel, t, y[0]);
            y[1] = slope_from_v(t, y[0], *kernel);
            projected = true;
        }
        traj.samples.push_back({t, y[0], y[1], 0.0, projected});
    }
    if (dir < 0) std::reverse(traj.samples.begin(), traj.samples.end());
    return traj;
}

} // namespace

BoundaryTrajectory trace_rayleigh(double xi, double t_end, const TraceOptions& opts,
                                  const EvolvedKernel* kernel) {
    if (!(t_end > 0.0))
        throw domain_error("trace_rayleigh requires t_end > 0");
    static const EvolvedKernel quartic = make_kernel("pearcey");
    if (!kernel) kernel = &quartic;
    const double fp0 = initial_slope(xi, kernel->spec());
    auto traj = trace_second_order(kernel, 0.0, {xi, fp0}, t_end, opts, TraceMethod::rayleigh);
    traj.branch_sign = xi >= 0 ? +1 : -1;
    return traj;
}

double asymptotic_boundary(double t, double xi_ai, bool positive_branch) {
    const double val = -2.0 * std::pow(t / 3.0, 1.5) + xi_ai * std::pow(3.0 * t, 1.0 / 6.0);
    return positive_branch ? -val : val;
}

BoundaryTrajectory restart_at(double t, double xi_ai, double eps, const EvolvedKernel& kernel,
                              const TraceOptions& opts) {
    if (!(t - eps > 0.0))
        throw domain_error("restart_at requires t - eps > 0");

    const double seed = asymptotic_boundary(t, xi_ai, /*positive_branch=*/true);
    double f = newton_on_v(kernel, t, seed, 30);
    if (std::abs(kernel.value(t, f)) >
        1e-8 * std::max(1.0, std::abs(kernel.derivative(t, f, 1))))
        throw not_found_error("restart_at: no root of v(t,.) near the asymptotic seed", {f});
    const double fp = slope_from_v(t, f, kernel);

    // The linearized flow amplifies errors like e^{3t^2/4}; at restart times
    // that matters, so re-anchor on v every output step unless told otherwise.
    TraceOptions o = opts;
    if (o.project_every == 0) o.project_every = 1;

    auto back = trace_second_order(&kernel, t, {f, fp}, t - eps, o, TraceMethod::rayleigh);
    auto fwd = trace_second_order(&kernel, t, {f, fp}, t + eps, o, TraceMethod::rayleigh);

    BoundaryTrajectory traj;
    traj.method = TraceMethod::rayleigh;
    traj.samples = std::move(back.samples);
    traj.samples.insert(traj.samples.end(), fwd.samples.begin() + 1, fwd.samples.end());
    return traj;
}

BoundaryTrajectory trace_abel(double f0, double t_end, const TraceOptions& opts) {
    if (f0 == 0.0)
        throw domain_error("trace_abel requires f0 != 0");
    BoundaryTrajectory traj;
    traj.method = TraceMethod::abel;

    using State1 = std::array<double, 1>;
    auto rhs = [](double t, const State1& y, State1& dy) {
        dy[0] = -(1.0 + t * y[0]) / (2.0 * y[0]);
    };
    auto slope = [](double t, double f) { return -(1.0 + t * f) / (2.0 * f); };

    const std::size_t n_out = static_cast<std::size_t>(std::llround(t_end / opts.dt_out));
    double t = 0.0;
    State1 y = {f0};
    traj.samples.push_back({0.0, f0, slope(0.0, f0)});
    for (std::size_t i = 1; i <= n_out; ++i) {
        const double tn = opts.dt_out * static_cast<double>(i);
        dopri5_integrate<1>(rhs, t, y, tn, opts.ode, [&](double tc, const State1& s) {
            if (std::abs(s[0]) < 1e-6)
                throw singularity_error("trace_abel: f reached 0 at t = " + std::to_string(tc),
                                        traj);
        });
        traj.samples.push_back({t, y[0], slope(t, y[0])});
    }
    return traj;
}

double closed_form_boundary(ClosedBoundaryKind kind, double param, double t) {
    switch (kind) {
        case ClosedBoundaryKind::airy3:
            return param - 0.25 * t * t;
        case ClosedBoundaryKind::shifted:
            return param - 0.5 * t - 0.25 * t * t;
        case ClosedBoundaryKind::hermite_plus:
        case ClosedBoundaryKind::hermite_minus: {
            if (t > 2.0)
                throw domain_error("hermite boundary is real only for t <= 2");
            const double r = 0.5 * std::sqrt(std::max(4.0 - t * t, 0.0));
            return kind == ClosedBoundaryKind::hermite_plus ? r : -r;
        }
        case ClosedBoundaryKind::linear:
            return -param * t;
    }
    throw domain_error("unknown closed-form boundary kind");
}

namespace {
double closed_form_slope(ClosedBoundaryKind kind, double param, double t) {
    switch (kind) {
        case ClosedBoundaryKind::airy3:
            return -0.5 * t;
        case ClosedBoundaryKind::shifted:
            return -0.5 - 0.5 * t;
        case ClosedBoundaryKind::hermite_plus:
        case ClosedBoundaryKind::hermite_minus: {
            const double r = std::sqrt(std::max(4.0 - t * t, 1e-300));
            const double d = -0.5 * t / r;
            return kind == ClosedBoundaryKind::hermite_plus ? d : -d;
        }
        case ClosedBoundaryKind::linear:
            return -param;
    }
    return 0.0;
}
} // namespace

double closed_form_boundary_f2(ClosedBoundaryKind kind, double param, double t) {
    switch (kind) {
        case ClosedBoundaryKind::airy3:
            return -0.5;
        case ClosedBoundaryKind::shifted:
            return -0.5;
        case ClosedBoundaryKind::hermite_plus:
        case ClosedBoundaryKind::hermite_minus: {
            const double u = 4.0 - t * t;
            const double d2 = -0.5 * (1.0 / std::sqrt(u) + t * t / std::pow(u, 1.5));
            return kind == ClosedBoundaryKind::hermite_plus ? d2 : -d2;
        }
        case ClosedBoundaryKind::linear:
            return 0.0;
    }
    (void)param;
    return 0.0;
}

BoundaryTrajectory trace_closed_form(ClosedBoundaryKind kind, double param, double t_end,
                                     double dt) {
    BoundaryTrajectory traj;
    traj.method = TraceMethod::closed_form;
    const std::size_t n_out = static_cast<std::size_t>(std::llround(t_end / dt));
    for (std::size_t i = 0; i <= n_out; ++i) {
        const double t = dt * static_cast<double>(i);
        traj.samples.push_back(
            {t, closed_form_boundary(kind, param, t), closed_form_slope(kind, param, t)});
    }
    return traj;
}

} // namespace pearcey
