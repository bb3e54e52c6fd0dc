#include "pearcey/serialize.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace pearcey {

namespace {
std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

const char* method_name(TraceMethod m) {
    switch (m) {
        case TraceMethod::rayleigh: return "rayleigh";
        case TraceMethod::abel: return "abel";
        case TraceMethod::closed_form: return "closed-form";
        case TraceMethod::asymptotic: return "asymptotic";
    }
    return "unknown";
}

TraceMethod method_from_name(const std::string& s) {
    if (s == "abel") return TraceMethod::abel;
    if (s == "closed-form") return TraceMethod::closed_form;
    if (s == "asymptotic") return TraceMethod::asymptotic;
    return TraceMethod::rayleigh;
}
} // namespace

void trajectory_to_csv(const BoundaryTrajectory& traj, std::ostream& os, bool truncated) {
    os << "t,f,f_prime,residual\n";
    for (const auto& s : traj.samples)
        os << fmt15(s.t) << ',' << fmt15(s.f) << ',' << fmt15(s.f_prime) << ','
           << fmt15(s.residual) << '\n';
    if (truncated) os << "# TRUNCATED\n";
}

std::string trajectory_to_json(const BoundaryTrajectory& traj, const TrajectoryMeta& meta) {
    nlohmann::json j;
    j["kernel"] = meta.kernel;
    j["branch"] = {{"index", traj.branch_index}, {"sign", traj.branch_sign}};
    j["method"] = method_name(traj.method);
    j["t_end"] = meta.t_end;
    j["dt"] = meta.dt;
    j["rtol"] = meta.rtol;
    j["spec_version"] = meta.spec_version;
    j["residuals_filled"] = traj.residuals_filled;
    auto& rows = j["samples"] = nlohmann::json::array();
    for (const auto& s : traj.samples)
        rows.push_back({{"t", s.t},
                        {"f", s.f},
                        {"f_prime", s.f_prime},
                        {"residual", s.residual},
                        {"projected", s.projected}});
    return j.dump(2);
}

BoundaryTrajectory trajectory_from_json(const std::string& text, TrajectoryMeta* meta) {
    const auto j = nlohmann::json::parse(text);
    BoundaryTrajectory traj;
    traj.branch_index = j["branch"]["index"].get<int>();
    traj.branch_sign = j["branch"]["sign"].get<int>();
    traj.method = method_from_name(j["method"].get<std::string>());
    traj.residuals_filled = j.value("residuals_filled", false);
    for (const auto& row : j["samples"])
        traj.samples.push_back({row["t"].get<double>(), row["f"].get<double>(),
                                row["f_prime"].get<double>(), row["residual"].get<double>(),
                                row.value("projected", false)});
    if (meta) {
        meta->kernel = j.value("kernel", "");
        meta->t_end = j.value("t_end", 0.0);
        meta->dt = j.value("dt", 0.0);
        meta->rtol = j.value("rtol", 0.0);
        meta->spec_version = j.value("spec_version", "1");
    }
    return traj;
}

std::string report_to_json(const ResidualReport& rep) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["grid"] = rep.grid;
    j["max_abs"] = rep.max_abs;
    j["mean_abs"] = rep.mean_abs;
    j["worst_point"] = {{"t", rep.worst_t}, {"x", rep.worst_x}};
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    return j.dump(2);
}

} // namespace pearcey
