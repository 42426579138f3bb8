#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

// Exit codes: 0 verification passed, 1 verification failed, 2 usage or
// configuration error.

namespace {

using hypflow::cli::RunConfig;

struct Flags {
    std::string config_path;
    std::string out_dir;
    bool plot = false;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> profiles;
    double t_max = 0.0;
    int steps = 0;
};

void apply_flags(const CLI::App& app, const Flags& flags, RunConfig& cfg) {
    if (app.count("--out")) cfg.out_dir = flags.out_dir;
    if (app.count("--plot")) cfg.plot = true;
    if (app.count("--tol")) cfg.tol = flags.tol;
    if (app.count("--seed")) cfg.seed = flags.seed;
    if (app.count("--profile")) cfg.profiles = flags.profiles;
    if (app.count("--t-max")) cfg.t_max = flags.t_max;
    if (app.count("--steps")) cfg.steps = flags.steps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady Euler and rescaled Navier-Stokes verification on the hyperbolic disk"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--config", flags.config_path, "JSON config file");
    app.add_option("--out", flags.out_dir, "output directory for reports");
    app.add_flag("--plot", flags.plot, "also write SVG line charts");
    app.add_option("--tol", flags.tol, "verification tolerance");
    app.add_option("--seed", flags.seed, "seed for probe-point sampling");
    app.add_option("--profile", flags.profiles, "time profile exp:RATE[:F0] (repeatable)");
    app.add_option("--t-max", flags.t_max, "time horizon");
    app.add_option("--steps", flags.steps, "time steps");

    CLI::App* verify = app.add_subcommand("verify", "pointwise residual verification");
    verify->require_subcommand(1);
    verify->fallthrough();
    CLI::App* verify_euler = verify->add_subcommand("euler", "steady Euler residual");
    CLI::App* verify_ns = verify->add_subcommand("ns", "Navier-Stokes residual, term by term");
    CLI::App* energy = app.add_subcommand("energy-report", "Leray-Hopf energy inequality table");
    CLI::App* nonuniq = app.add_subcommand("nonuniq", "non-uniqueness certificate");
    CLI::App* dodziuk = app.add_subcommand("dodziuk", "dimension dichotomy experiment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help returns 0, everything else is usage error
    }

    RunConfig cfg;
    try {
        if (!flags.config_path.empty()) cfg = hypflow::cli::load_config_file(flags.config_path);
        apply_flags(app, flags, cfg);
        // re-validate flag-supplied values through the same gate as the file
        cfg.merge_json(nlohmann::json::object());
        if (nonuniq->parsed() && cfg.profiles.size() < 2)
            throw std::invalid_argument(
                "nonuniq needs two profiles (--profile twice, or \"profiles\" with two entries)");
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        bool pass = false;
        if (verify_euler->parsed())
            pass = hypflow::cli::cmd_verify_euler(cfg);
        else if (verify_ns->parsed())
            pass = hypflow::cli::cmd_verify_ns(cfg);
        else if (energy->parsed())
            pass = hypflow::cli::cmd_energy_report(cfg);
        else if (nonuniq->parsed())
            pass = hypflow::cli::cmd_nonuniq(cfg);
        else if (dodziuk->parsed())
            pass = hypflow::cli::cmd_dodziuk(cfg);
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
