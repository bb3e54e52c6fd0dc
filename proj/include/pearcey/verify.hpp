#ifndef PEARCEY_VERIFY_HPP
#define PEARCEY_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pearcey/boundary.hpp"

namespace pearcey {

struct ResidualReport {
    std::string name;
    std::string grid;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double worst_t = 0.0;
    double worst_x = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Quadrature configuration used by all verification paths: deliberately
/// different node density from the evaluator defaults, so the checks never
/// reuse the exact code path under test.
QuadratureSpec verification_spec();

/// Evaluates v(t, f(t)) at every trajectory sample and fills the residual
/// column.  Reports rather than throws on failure.
ResidualReport check_zero_residual(BoundaryTrajectory& traj, const EvolvedKernel& kernel,
                                   double tol);

/// Residuals of v''' = x v + t v' and v'''' = v + x v' + t v'' for the
/// quartic kernel, each term from an independent moment quadrature.
std::pair<double, double> check_airy4_identities(double t, double x);
ResidualReport check_airy4_identities_grid(const std::vector<double>& ts,
                                           const std::vector<double>& xs, double tol);

/// First-integral identities along a trajectory: f' v' + v''/2 = 0 and
/// f'' v' + f'(f' v'' + v''') + v''''/4 = 0.  `f2` supplies f'' (defaults to
/// the Rayleigh right-hand side); pass `first_only` for first-order traces.
ResidualReport check_hit_identities(const BoundaryTrajectory& traj, const EvolvedKernel& kernel,
                                    double tol,
                                    const std::function<double(const RayleighState&)>& f2 = {},
                                    bool first_only = false);

/// Heat-equation residual |d_t v - v''/2| by central finite differences
/// (steps 1e-4 in t, 1e-3 in x), measured against the local scale.
ResidualReport check_heat_residual(const EvolvedKernel& kernel, const std::vector<double>& ts,
                                   const std::vector<double>& xs, double tol);

/// The scaled quantity (3t)^{1/6} e^{t^2/12 - xi t^{2/3}/3^{1/3}} v(t, f~(t))
/// at each listed time; approaches Ai(xi) as t grows.  Quadrature truncation
/// is tightened by e^{-t^2/12} to beat the exponential amplification.
std::vector<double> check_scaled_limit(double xi, const std::vector<double>& t_list);

struct HermiteDiscrepancyReport {
    ResidualReport derived_curve;    ///< +-sqrt(4 - t^2)/2 on t in [0, 2]
    ResidualReport published_curve;  ///< +-sqrt(t^2 - 4)/2 sampled at t >= 2
    std::string note;
};

/// Documents that the derived branch zeroes the Hermite-Gauss kernel while
/// the published square-root curve does not (its argument sign is flipped).
HermiteDiscrepancyReport check_hermite_discrepancy();

} // namespace pearcey

#endif
