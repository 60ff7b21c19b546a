#pragma once

#include <optional>
#include <string>

#include "burgers/grid.hpp"
#include "burgers/oracles.hpp"
#include "burgers/outer_scheme.hpp"

namespace burgers {

enum class InitialPreset { zero, constant, sine, potential };

/// Flat key=value run configuration; keys mirror the field names.
struct SolverConfig {
    int n = 1;
    int points_per_axis = 64;
    double nu = 0.1;
    int steps = 4;
    Backend backend = Backend::spectral;
    int substeps_per_step = 64;
    double delta_tol = 1e-10;
    int max_substeps = 40;
    double contraction_bound = 0.5;
    int max_retries = 4;
    std::optional<double> c_star_n_override;
    DriftSource drift_source = DriftSource::first_substep;
    InitialPreset initial_condition = InitialPreset::sine;
    double ic_amplitude = 1.0;  ///< sine / potential presets
    double ic_value = 1.0;      ///< constant preset
    std::string output_dir = "out";
    int snapshot_stride = 1;
    int parametrix_order = 1;
    int parametrix_time_nodes = 12;

    void validate() const;
    SchemeConfig scheme() const;
};

/// Parses a flat key=value file; lines starting with '#' and blank lines are
/// skipped. Unknown keys, bad values and violated invariants raise
/// config_error with the offending line number and field.
SolverConfig parse_config_file(const std::string& path);
SolverConfig parse_config_text(const std::string& text, const std::string& origin);

std::string to_string(Backend backend);
std::string to_string(DriftSource source);
std::string to_string(InitialPreset preset);
InitialPreset preset_from_string(const std::string& name);

/// Initial field of the configured preset on the configured grid.
VectorField initial_field(const SolverConfig& config);

/// Hopf-Cole potential for a preset: sine -> (a/2pi) sum_j cos(2pi x_j),
/// potential -> (a/2pi) prod_j cos(2pi x_j), constant/zero -> constants
/// (u identically 0). The preset's -grad(phi0) equals initial_field.
PotentialData oracle_potential(InitialPreset preset, double amplitude, double value, double nu);

}  // namespace burgers
