#ifndef PEARCEY_BOUNDARY_HPP
#define PEARCEY_BOUNDARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pearcey/evolve.hpp"
#include "pearcey/ode.hpp"

namespace pearcey {

struct RayleighState {
    double t;
    double f;
    double f_prime;
};

enum class TraceMethod { rayleigh, abel, closed_form, asymptotic };

struct TrajectorySample {
    double t;
    double f;
    double f_prime;
    double residual = 0.0;   ///< |v(t, f)|, filled by the verification pass
    bool projected = false;  ///< sample was re-anchored onto the zero set
};

struct BoundaryTrajectory {
    std::vector<TrajectorySample> samples;
    int branch_index = 1;
    int branch_sign = +1;
    TraceMethod method = TraceMethod::rayleigh;
    bool residuals_filled = false;
};

/// Trajectory left the slope cap or the step underflowed; carries what was
/// traced so far.
class blow_up_error : public error {
public:
    blow_up_error(const std::string& msg, BoundaryTrajectory partial)
        : error(msg), trajectory(std::move(partial)) {}
    BoundaryTrajectory trajectory;
};

/// Abel trace crossed f = 0, where the equation divides by f.
class singularity_error : public error {
public:
    singularity_error(const std::string& msg, BoundaryTrajectory partial)
        : error(msg), trajectory(std::move(partial)) {}
    BoundaryTrajectory trajectory;
};

/// Right-hand side of f'' = 2 f'^3 - t f'/2 - f/4.
double rayleigh_rhs(const RayleighState& s);

/// f'(0) = -phi''(xi) / (2 phi'(xi)) at a zero xi of phi.
double initial_slope(double xi, const QuadratureSpec& spec = {});

/// f'(t) = -v''(t,f) / (2 v'(t,f)) for any registered kernel.
double slope_from_v(double t, double f, const EvolvedKernel& kernel);

struct TraceOptions {
    OdeOptions ode{};                 // rtol 1e-12 / atol 1e-14 defaults
    double dt_out = 0.01;
    double slope_cap = 50.0;
    /// Re-anchor f (Newton on v) and f' (slope_from_v) every `project_every`
    /// output samples; 0 disables.  Needed for horizons beyond t ~ 5, where
    /// the ODE's unstable mode amplifies integration error as exp(3 t^2 / 4).
    std::size_t project_every = 0;
};

/// Integrate the Rayleigh ODE from (0, xi, initial_slope(xi)) to t_end,
/// emitting samples on the fixed output grid.
BoundaryTrajectory trace_rayleigh(double xi, double t_end, const TraceOptions& opts = {},
                                  const EvolvedKernel* kernel = nullptr);

/// -2 (t/3)^{3/2} + xi_ai (3t)^{1/6}; `positive_branch` returns its negation
/// (matching the branch traced from a positive zero of phi).
double asymptotic_boundary(double t, double xi_ai, bool positive_branch = false);

/// Restart procedure: root-find v(t,.) seeded at the asymptotic boundary, set
/// the slope from the derivative ratio, then integrate the Rayleigh ODE over
/// [t - eps, t + eps].
BoundaryTrajectory restart_at(double t, double xi_ai, double eps, const EvolvedKernel& kernel,
                              const TraceOptions& opts = {});

/// First-order Abel trace f' = -(1 + t f) / (2 f) from (0, f0).
BoundaryTrajectory trace_abel(double f0, double t_end, const TraceOptions& opts = {});

enum class ClosedBoundaryKind { airy3, shifted, hermite_plus, hermite_minus, linear };

/// Closed-form boundaries: C - t^2/4, C - t/2 - t^2/4, +-sqrt(4 - t^2)/2,
/// and -b t.  `param` is C (or b for linear).
double closed_form_boundary(ClosedBoundaryKind kind, double param, double t);

/// Sampled closed-form boundary with analytic slopes.
BoundaryTrajectory trace_closed_form(ClosedBoundaryKind kind, double param, double t_end,
                                     double dt = 0.01);

/// Analytic f'' for a closed-form boundary (for the hit-identity checks).
double closed_form_boundary_f2(ClosedBoundaryKind kind, double param, double t);

} // namespace pearcey

#endif
