#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "burgers/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Global Picard scheme for the viscous Burgers system on the unit torus"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "execute a run described by a key=value config");
    run_cmd->add_option("config", config_path, "config file path")->required();

    double c0 = 1.0;
    double c_star_n = 1.0;
    int steps = 0;
    auto* schedule_cmd =
        app.add_subcommand("schedule", "print the step-size table for (c0, c_star_n, steps)");
    schedule_cmd->add_option("c0", c0)->required();
    schedule_cmd->add_option("c_star_n", c_star_n)->required();
    schedule_cmd->add_option("steps", steps)->required();

    std::string compare_dir;
    std::string oracle = "potential";
    double threshold = 1e-2;
    auto* compare_cmd =
        app.add_subcommand("compare", "compare run snapshots against the Hopf-Cole oracle");
    compare_cmd->add_option("dir", compare_dir, "run output directory")->required();
    compare_cmd->add_option("--oracle", oracle, "oracle preset (zero|constant|sine|potential)")
        ->required();
    compare_cmd->add_option("--threshold", threshold, "final sup-error gate");

    int est_n = 1;
    double est_nu = 0.1;
    int est_grid = 64;
    auto* estimate_cmd =
        app.add_subcommand("estimate-cstar", "probe the kernel amplification constants");
    estimate_cmd->add_option("n", est_n)->required();
    estimate_cmd->add_option("nu", est_nu)->required();
    estimate_cmd->add_option("grid", est_grid)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (run_cmd->parsed())
        return burgers::command_run(config_path, std::cout, std::cerr);
    if (schedule_cmd->parsed())
        return burgers::command_schedule(c0, c_star_n, steps, std::cout, std::cerr);
    if (compare_cmd->parsed())
        return burgers::command_compare(compare_dir, oracle, threshold, std::cout, std::cerr);
    if (estimate_cmd->parsed())
        return burgers::command_estimate_cstar(est_n, est_nu, est_grid, std::cout, std::cerr);
    return 2;
}
