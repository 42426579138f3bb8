#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "hypflow/time_profile.hpp"

namespace hypflow::cli {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string("config: ") + name + " must be > 0");
}

}  // namespace

void RunConfig::merge_json(const nlohmann::json& j) {
    if (j.contains("boundary"))
        boundary = boundary_from_json_string(j.at("boundary").dump());
    if (j.contains("boundary_file")) {
        std::ifstream f(j.at("boundary_file").get<std::string>());
        if (!f)
            throw std::invalid_argument("config: cannot open boundary_file " +
                                        j.at("boundary_file").get<std::string>());
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        boundary = boundary_from_json_string(text);
    }
    boundary3d = j.value("boundary3d", boundary3d);

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        grid_n_r = g.value("n_r", grid_n_r);
        grid_n_theta = g.value("n_theta", grid_n_theta);
        grid_r_max = g.value("r_max", grid_r_max);
    }
    if (j.contains("quad")) {
        const auto& q = j.at("quad");
        quad_radial = q.value("radial", quad_radial);
        quad_angular = q.value("angular", quad_angular);
    }
    if (j.contains("graded")) {
        const auto& g = j.at("graded");
        graded_max_panels = g.value("max_panels", graded_max_panels);
        graded_panel_nodes = g.value("panel_nodes", graded_panel_nodes);
        graded_angular = g.value("angular", graded_angular);
    }
    if (j.contains("profiles")) profiles = j.at("profiles").get<std::vector<std::string>>();
    t_max = j.value("t_max", t_max);
    steps = j.value("steps", steps);
    probes = j.value("probes", probes);
    tol = j.value("tol", tol);
    seed = j.value("seed", seed);
    negative_control = j.value("negative_control", negative_control);

    if (j.contains("growth")) {
        const auto& g = j.at("growth");
        growth_r_max = g.value("r_max", growth_r_max);
        growth_shells = g.value("shells", growth_shells);
        growth_panel_nodes = g.value("panel_nodes", growth_panel_nodes);
        growth_fit_lo = g.value("fit_lo", growth_fit_lo);
        growth_circle_count = g.value("circle_count", growth_circle_count);
        growth_kernel_polar = g.value("kernel_polar", growth_kernel_polar);
        growth_kernel_azimuth = g.value("kernel_azimuth", growth_kernel_azimuth);
        growth_sphere_polar = g.value("sphere_polar", growth_sphere_polar);
        growth_sphere_azimuth = g.value("sphere_azimuth", growth_sphere_azimuth);
    }

    out_dir = j.value("out", out_dir);
    plot = j.value("plot", plot);

    check_positive(tol, "tol");
    check_positive(t_max, "t_max");
    if (!(grid_r_max > 0.0 && grid_r_max < 1.0))
        throw std::invalid_argument("config: grid.r_max must lie in (0, 1)");
    if (steps < 1) throw std::invalid_argument("config: steps must be >= 1");
    if (probes < 1) throw std::invalid_argument("config: probes must be >= 1");
    if (negative_control != "none" && negative_control != "pressure_factor")
        throw std::invalid_argument("config: unknown negative_control '" + negative_control +
                                    "'");
    if (profiles.empty()) throw std::invalid_argument("config: profiles must not be empty");
    for (const std::string& p : profiles) TimeProfile::parse(p);  // validate early
}

nlohmann::ordered_json RunConfig::echo() const {
    nlohmann::ordered_json j;
    j["boundary"] = nlohmann::ordered_json::parse(to_json_string(boundary));
    j["boundary3d"] = boundary3d;
    j["grid"] = {{"n_r", grid_n_r}, {"n_theta", grid_n_theta}, {"r_max", grid_r_max}};
    j["quad"] = {{"radial", quad_radial}, {"angular", quad_angular}};
    j["graded"] = {{"max_panels", graded_max_panels},
                   {"panel_nodes", graded_panel_nodes},
                   {"angular", graded_angular}};
    j["profiles"] = profiles;
    j["t_max"] = t_max;
    j["steps"] = steps;
    j["probes"] = probes;
    j["tol"] = tol;
    j["seed"] = seed;
    j["negative_control"] = negative_control;
    j["growth"] = {{"r_max", growth_r_max},
                   {"shells", growth_shells},
                   {"panel_nodes", growth_panel_nodes},
                   {"fit_lo", growth_fit_lo},
                   {"circle_count", growth_circle_count},
                   {"kernel_polar", growth_kernel_polar},
                   {"kernel_azimuth", growth_kernel_azimuth},
                   {"sphere_polar", growth_sphere_polar},
                   {"sphere_azimuth", growth_sphere_azimuth}};
    return j;
}

SphereFn RunConfig::boundary3d_fn() const {
    if (boundary3d == "xi3") return [](const Vec3& xi) { return xi.z; };
    if (boundary3d == "one") return [](const Vec3&) { return 1.0; };
    if (boundary3d == "zero") return [](const Vec3&) { return 0.0; };
    if (boundary3d == "x1x3") return [](const Vec3& xi) { return xi.x * xi.z; };
    throw std::invalid_argument("config: unknown boundary3d '" + boundary3d +
                                "' (expected xi3, one, zero or x1x3)");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    RunConfig cfg;
    cfg.merge_json(j);
    return cfg;
}

}  // namespace hypflow::cli
