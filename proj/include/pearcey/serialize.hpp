#ifndef PEARCEY_SERIALIZE_HPP
#define PEARCEY_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "pearcey/boundary.hpp"
#include "pearcey/verify.hpp"

namespace pearcey {

/// Trajectory metadata carried alongside the samples in JSON output.
struct TrajectoryMeta {
    std::string kernel;
    double t_end = 0.0;
    double dt = 0.0;
    double rtol = 0.0;
    std::string spec_version = "1";
};

/// CSV with header `t,f,f_prime,residual`, 15 significant digits per value.
/// Deterministic: identical input produces byte-identical output.
void trajectory_to_csv(const BoundaryTrajectory& traj, std::ostream& os,
                       bool truncated = false);

std::string trajectory_to_json(const BoundaryTrajectory& traj, const TrajectoryMeta& meta);
BoundaryTrajectory trajectory_from_json(const std::string& text, TrajectoryMeta* meta = nullptr);

std::string report_to_json(const ResidualReport& rep);

} // namespace pearcey

#endif
