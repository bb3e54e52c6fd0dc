#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pearcey/serialize.hpp"

using namespace pearcey;

namespace {
BoundaryTrajectory sample_trajectory() {
    BoundaryTrajectory traj;
    traj.branch_index = 2;
    traj.branch_sign = -1;
    traj.method = TraceMethod::abel;
    traj.residuals_filled = true;
    traj.samples = {
        {0.0, 2.4419682, 0.7299232, 1.5e-16, false},
        {0.01, 2.4492741233456789, 0.7301211, 2.5e-16, true},
        {0.02, 2.4565911, 0.7303401, 0.3e-16, false},
    };
    return traj;
}
} // namespace

TEST_CASE("CSV header and shape") {
    std::ostringstream os;
    trajectory_to_csv(sample_trajectory(), os);
    const std::string text = os.str();
    CHECK(text.rfind("t,f,f_prime,residual\n", 0) == 0);
    // header + three rows
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 4);
    // 15 significant digits survive
    CHECK(text.find("2.44927412334568") != std::string::npos);
}

TEST_CASE("CSV output is deterministic") {
    std::ostringstream a, b;
    trajectory_to_csv(sample_trajectory(), a);
    trajectory_to_csv(sample_trajectory(), b);
    CHECK(a.str() == b.str());
}

TEST_CASE("truncated trace gets a trailer comment") {
    std::ostringstream os;
    trajectory_to_csv(sample_trajectory(), os, /*truncated=*/true);
    const std::string text = os.str();
    CHECK(text.size() >= 12);
    CHECK(text.substr(text.size() - 12) == "# TRUNCATED\n");
}

TEST_CASE("JSON round-trip preserves the trajectory") {
    const auto traj = sample_trajectory();
    TrajectoryMeta meta;
    meta.kernel = "pearcey";
    meta.t_end = 0.02;
    meta.dt = 0.01;
    meta.rtol = 1e-12;

    const std::string text = trajectory_to_json(traj, meta);
    TrajectoryMeta back_meta;
    const auto back = trajectory_from_json(text, &back_meta);

    CHECK(back.branch_index == traj.branch_index);
    CHECK(back.branch_sign == traj.branch_sign);
    CHECK(back.method == traj.method);
    CHECK(back.residuals_filled == traj.residuals_filled);
    REQUIRE(back.samples.size() == traj.samples.size());
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        CHECK(back.samples[i].t == traj.samples[i].t);
        CHECK(back.samples[i].f == traj.samples[i].f);
        CHECK(back.samples[i].f_prime == traj.samples[i].f_prime);
        CHECK(back.samples[i].residual == traj.samples[i].residual);
        CHECK(back.samples[i].projected == traj.samples[i].projected);
    }
    CHECK(back_meta.kernel == "pearcey");
    CHECK(back_meta.t_end == 0.02);
    CHECK(back_meta.rtol == 1e-12);
}

TEST_CASE("report serialization carries the pass verdict") {
    ResidualReport rep;
    rep.name = "zero-residual";
    rep.grid = "401 trajectory samples";
    rep.max_abs = 3e-9;
    rep.mean_abs = 1e-10;
    rep.worst_t = 3.14;
    rep.worst_x = -2.0;
    rep.tolerance = 1e-6;
    rep.pass = true;
    const std::string j = report_to_json(rep);
    CHECK(j.find("\"zero-residual\"") != std::string::npos);
    CHECK(j.find("\"pass\": true") != std::string::npos);
    CHECK(j.find("\"max_abs\"") != std::string::npos);
}
