#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypflow/ball3d.hpp"
#include "hypflow/harmonic.hpp"

namespace hypflow::cli {

// Effective configuration of a run: defaults, overlaid by --config JSON,
// overlaid by explicit flags. Everything that influences report contents is
// echoed into the JSON summary; output location and plotting are not.
struct RunConfig {
    RunConfig() { boundary.a = {1.0}; }  // phi = cos(theta) runs out of the box

    BoundaryData boundary;
    std::string boundary3d = "xi3";

    int grid_n_r = 30;            // verification probe grid
    int grid_n_theta = 60;
    double grid_r_max = 0.95;

    int quad_radial = 40;         // disk quadrature rule
    int quad_angular = 80;

    int graded_max_panels = 40;   // deformation-energy rule
    int graded_panel_nodes = 16;
    int graded_angular = 64;

    std::vector<std::string> profiles = {"exp:2"};
    double t_max = 2.0;
    int steps = 20;
    int probes = 200;

    double tol = 1e-10;
    std::uint64_t seed = 20240501;
    std::string negative_control = "none";  // or "pressure_factor"

    // dodziuk experiment
    double growth_r_max = 10.0;
    int growth_shells = 40;
    int growth_panel_nodes = 8;
    double growth_fit_lo = 4.0;
    int growth_circle_count = 64;
    int growth_kernel_polar = 12;
    int growth_kernel_azimuth = 32;
    int growth_sphere_polar = 12;
    int growth_sphere_azimuth = 24;

    std::string out_dir = ".";
    bool plot = false;

    void merge_json(const nlohmann::json& j);
    nlohmann::ordered_json echo() const;

    SphereFn boundary3d_fn() const;
};

RunConfig load_config_file(const std::string& path);

}  // namespace hypflow::cli
