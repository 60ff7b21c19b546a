#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "burgers/config.hpp"
#include "burgers/outer_scheme.hpp"

namespace burgers {

struct RunArtifacts {
    RunResult result;
    std::filesystem::path directory;
    std::vector<std::filesystem::path> snapshot_files;
    int exit_code = 0;  ///< 0 success, 3 step failure
};

/// Executes run_global for a config and writes snapshots (*.bpfx),
/// trace.csv, schedule.csv (effective values) and manifest.txt into
/// config.output_dir. Timestamps go to runinfo.txt only, so manifests and
/// snapshots from identical configs are bit-identical.
RunArtifacts run_to_directory(const SolverConfig& config);

// CLI entry points; all return process exit codes (0 ok, 2 input error,
// 3 numerical failure).
int command_run(const std::string& config_path, std::ostream& out, std::ostream& err);
int command_schedule(double c0, double c_star_n, int steps, std::ostream& out,
                     std::ostream& err);
int command_compare(const std::string& directory, const std::string& oracle_preset,
                    double threshold, std::ostream& out, std::ostream& err);
int command_estimate_cstar(int n, double nu, int grid_points, std::ostream& out,
                           std::ostream& err);

/// Shortest round-trip decimal form of a double (%.17g).
std::string format_double(double v);

}  // namespace burgers
