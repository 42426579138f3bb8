#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hypflow/euler.hpp"
#include "hypflow/higher_dim.hpp"
#include "hypflow/navier_stokes.hpp"
#include "hypflow/sampling.hpp"
#include "svg_plot.hpp"

namespace hypflow::cli {

namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

void write_summary(const RunConfig& cfg, const std::string& command, bool pass,
                   nlohmann::ordered_json metrics) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["pass"] = pass;
    j["metrics"] = std::move(metrics);
    j["config_echo"] = cfg.echo();
    const std::string text = j.dump(2) + "\n";
    std::ofstream f(out_path(cfg, "summary.json"), std::ios::binary);
    f << text;
    std::cout << text;
}

int count_near_rim(const std::vector<DiskPoint>& pts) {
    int flagged = 0;
    for (const DiskPoint& p : pts)
        if (near_rim(p)) ++flagged;
    return flagged;
}

}  // namespace

bool cmd_verify_euler(const RunConfig& cfg) {
    SteadySolution sol = build_steady(cfg.boundary);
    if (cfg.negative_control == "pressure_factor") sol = sol.with_pressure_factor(2.0);

    const PolarGrid grid{cfg.grid_n_r, cfg.grid_n_theta, cfg.grid_r_max};
    const std::vector<DiskPoint> pts = grid.points();

    Report rep({"point_x", "point_y", "residual_x", "residual_y", "residual_norm"});
    double max_residual = 0.0;
    DiskPoint worst(0.0, 0.0);
    for (const DiskPoint& p : pts) {
        const Vec2 r = euler_residual(sol, p);
        const double n = r.norm();
        rep.add_row({p.x(), p.y(), r.x, r.y, n});
        if (n > max_residual) {
            max_residual = n;
            worst = p;
        }
    }
    rep.write_csv_file(out_path(cfg, "euler_residuals.csv"));

    const bool pass = max_residual <= cfg.tol;
    nlohmann::ordered_json metrics;
    metrics["max_residual"] = max_residual;
    metrics["tolerance"] = cfg.tol;
    metrics["probe_points"] = pts.size();
    metrics["near_rim_flagged"] = count_near_rim(pts);
    metrics["kinetic_energy"] =
        l2_norms(sol.potential(), DiskRule(cfg.quad_radial, cfg.quad_angular)).hyperbolic;
    write_summary(cfg, "verify euler", pass, metrics);
    if (!pass)
        std::cerr << "verify euler: residual " << max_residual << " at probe point ("
                  << worst.x() << ", " << worst.y() << ") exceeds tolerance " << cfg.tol << "\n";
    return pass;
}

bool cmd_verify_ns(const RunConfig& cfg) {
    const TimeProfile profile = TimeProfile::parse(cfg.profiles.at(0));
    const NSSolution sol(cfg.boundary, profile);
    const std::vector<DiskPoint> pts = sample_disk_points(cfg.seed, cfg.probes, cfg.grid_r_max);

    Report rep({"t", "point_x", "point_y", "residual_norm", "ricci_norm", "advective_gap"});
    double max_residual = 0.0, max_ricci = 0.0, max_gap = 0.0, max_codiff = 0.0;
    double worst_t = 0.0;
    DiskPoint worst(0.0, 0.0);
    for (int i = 0; i <= cfg.steps; ++i) {
        const double t = cfg.t_max * i / cfg.steps;
        for (const DiskPoint& p : pts) {
            const NSResidualTerms terms = ns_residual_terms(sol, t, p);
            const double n = terms.sum.norm();
            rep.add_row({t, p.x(), p.y(), n, terms.ricci.norm(),
                         terms.advective_identity_gap.norm()});
            if (n > max_residual) {
                max_residual = n;
                worst = p;
                worst_t = t;
            }
            max_ricci = std::max(max_ricci, terms.ricci.norm());
            max_gap = std::max(max_gap, terms.advective_identity_gap.norm());
            max_codiff = std::max(max_codiff, std::abs(sol.coclosedness(t, p)));
        }
    }
    rep.write_csv_file(out_path(cfg, "ns_residuals.csv"));

    const bool pass = max_residual <= cfg.tol && max_gap <= cfg.tol;
    nlohmann::ordered_json metrics;
    metrics["max_residual"] = max_residual;
    metrics["max_ricci_term"] = max_ricci;
    metrics["max_advective_gap"] = max_gap;
    metrics["max_codifferential"] = max_codiff;
    metrics["tolerance"] = cfg.tol;
    write_summary(cfg, "verify ns", pass, metrics);
    if (!pass)
        std::cerr << "verify ns: residual " << max_residual << " at t = " << worst_t
                  << ", probe (" << worst.x() << ", " << worst.y() << ") exceeds tolerance "
                  << cfg.tol << "\n";
    return pass;
}

bool cmd_energy_report(const RunConfig& cfg) {
    const TimeProfile profile = TimeProfile::parse(cfg.profiles.at(0));
    const NSSolution sol(cfg.boundary, profile);
    const DiskRule rule(cfg.quad_radial, cfg.quad_angular);

    const Report rep = energy_report(sol, rule, cfg.t_max, cfg.steps);
    rep.write_csv_file(out_path(cfg, "energy.csv"));

    const AdmissibilityResult adm = leray_hopf_admissible(profile, cfg.t_max, cfg.steps);

    if (cfg.plot) {
        PlotSeries lhs{"lhs = E + 4 int ||Def v||^2", {}, {}};
        PlotSeries rhs{"rhs = E(0)", {}, {}};
        for (std::size_t i = 0; i < rep.row_count(); ++i) {
            lhs.x.push_back(rep.number(i, 0));
            lhs.y.push_back(rep.number(i, 4));
            rhs.x.push_back(rep.number(i, 0));
            rhs.y.push_back(rep.number(i, 5));
        }
        write_svg_line_chart(out_path(cfg, "energy.svg"), "energy inequality", {lhs, rhs});
    }

    nlohmann::ordered_json metrics;
    metrics["profile"] = profile.describe();
    metrics["admissible"] = adm.pass;
    metrics["min_margin"] = adm.min_margin;
    metrics["min_margin_time"] = adm.min_margin_time;
    metrics["initial_energy"] = rep.number(0, 4);
    write_summary(cfg, "energy-report", adm.pass, metrics);
    if (!adm.pass)
        std::cerr << "energy-report: profile " << profile.describe()
                  << " violates the Leray-Hopf condition at t = " << adm.min_margin_time
                  << " (margin " << adm.min_margin << ")\n";
    return adm.pass;
}

bool cmd_nonuniq(const RunConfig& cfg) {
    if (cfg.profiles.size() < 2)
        throw std::invalid_argument("nonuniq needs two profiles (--profile twice or "
                                    "\"profiles\": [..., ...] in the config)");
    const TimeProfile f1 = TimeProfile::parse(cfg.profiles.at(0));
    const TimeProfile f2 = TimeProfile::parse(cfg.profiles.at(1));
    const DiskRule rule(cfg.quad_radial, cfg.quad_angular);
    const std::vector<DiskPoint> probes =
        sample_disk_points(cfg.seed, cfg.probes, cfg.grid_r_max);

    const NonUniquenessCertificate cert =
        nonuniqueness_demo(cfg.boundary, f1, f2, rule, cfg.t_max, cfg.steps, probes);
    cert.table.write_csv_file(out_path(cfg, "nonuniq.csv"));

    if (cfg.plot) {
        PlotSeries sep{"||v1(t) - v2(t)||_L2", {}, {}};
        for (std::size_t i = 0; i < cert.table.row_count(); ++i) {
            sep.x.push_back(cert.table.number(i, 0));
            sep.y.push_back(cert.table.number(i, 7));
        }
        write_svg_line_chart(out_path(cfg, "nonuniq.svg"), "L2 separation of two solutions",
                             {sep});
    }

    const bool pass = cert.pass && cert.max_residual <= cfg.tol;
    nlohmann::ordered_json metrics;
    metrics["same_initial_data"] = cert.same_initial_data;
    metrics["both_admissible"] = cert.both_admissible;
    metrics["max_residual"] = cert.max_residual;
    metrics["max_ricci_term"] = cert.max_ricci_term;
    metrics["max_separation"] = cert.max_separation;
    metrics["l2_velocity"] = cert.l2_velocity;
    write_summary(cfg, "nonuniq", pass, metrics);
    if (!pass)
        std::cerr << "nonuniq: certificate failed (max_residual = " << cert.max_residual
                  << ", max_separation = " << cert.max_separation << ")\n";
    return pass;
}

bool cmd_dodziuk(const RunConfig& cfg) {
    DichotomyParams params;
    params.r_max = cfg.growth_r_max;
    params.shells = cfg.growth_shells;
    params.panel_nodes = cfg.growth_panel_nodes;
    params.fit_window_lo = cfg.growth_fit_lo;
    params.circle_count = cfg.growth_circle_count;
    params.kernel_polar = cfg.growth_kernel_polar;
    params.kernel_azimuth = cfg.growth_kernel_azimuth;
    params.sphere_polar = cfg.growth_sphere_polar;
    params.sphere_azimuth = cfg.growth_sphere_azimuth;

    const DichotomyResult res = dichotomy_experiment(cfg.boundary, cfg.boundary3d_fn(), params);

    growth_report(res.curve2).write_csv_file(out_path(cfg, "growth_n2.csv"));
    growth_report(res.curve3).write_csv_file(out_path(cfg, "growth_n3.csv"));

    if (cfg.plot) {
        PlotSeries s2{"n = 2", res.curve2.radius, res.curve2.energy};
        PlotSeries s3{"n = 3", res.curve3.radius, res.curve3.energy};
        write_svg_line_chart(out_path(cfg, "growth.svg"),
                             "truncated energy vs hyperbolic radius", {s2, s3});
    }

    const bool pass = res.class2.label == GrowthClass::Convergent &&
                      res.class3.label == GrowthClass::Divergent;
    nlohmann::ordered_json metrics;
    metrics["n2"] = to_string(res.class2.label);
    metrics["n3"] = to_string(res.class3.label);
    metrics["n2_limit_estimate"] = res.class2.limit_estimate;
    metrics["n2_spectral_oracle"] = res.spectral_oracle2;
    metrics["n2_tail_estimate"] = res.class2.tail_estimate;
    metrics["n3_fit_slope"] = res.curve3.fit_slope;
    metrics["n3_fit_residual"] = res.curve3.fit_residual;
    metrics["n3_slope_shift_on_doubling"] = res.class3.slope_shift;
    write_summary(cfg, "dodziuk", pass, metrics);
    if (!pass)
        std::cerr << "dodziuk: classification n2 = " << to_string(res.class2.label)
                  << ", n3 = " << to_string(res.class3.label) << "\n";
    return pass;
}

}  // namespace hypflow::cli
