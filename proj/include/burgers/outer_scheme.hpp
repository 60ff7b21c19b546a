#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/grid.hpp"
#include "burgers/kernels.hpp"
#include "burgers/linear_substep.hpp"

namespace burgers {

/// One row of the step-size recursion rho_l = 1 / (4 c*_n (c0 + l - 1)).
struct ScheduleEntry {
    int l = 1;  ///< 1-based step number
    double rho = 0.0;
    double c_l = 0.0;  ///< C_l = c0 + l
    double t_l = 0.0;  ///< cumulative physical time sum_{k<=l} rho_k
};

struct Schedule {
    double c0 = 1.0;
    double c_star_n = 1.0;
    std::vector<ScheduleEntry> entries;

    const ScheduleEntry& entry_for_step(int step_index) const;  // 0-based step
};

Schedule build_schedule(double c0, double c_star_n, int steps);

/// Per-substep record of one Picard iteration.
struct PicardRecord {
    int k = 1;
    double sup = 0.0;
    double c01 = 0.0;
    double c12 = 0.0;
    std::optional<double> ratio;  ///< sup(delta^k)/sup(delta^{k-1}), k >= 2
};

struct PicardTrace {
    int step_index = 0;  ///< 0-based
    std::vector<PicardRecord> records;
    bool converged = false;
    int substeps_used = 0;
    int retries = 0;
    double rho_used = 0.0;
};

/// Non-convergence of one time step; carries the trace of the last attempt.
struct step_failure_error : numeric_error {
    PicardTrace trace;
    step_failure_error(const std::string& msg, PicardTrace t)
        : numeric_error(msg), trace(std::move(t)) {}
};

enum class DriftSource { first_substep, converged };

/// Solver-side configuration of the outer scheme.
struct SchemeConfig {
    Backend backend = Backend::spectral;
    int substeps = 64;
    double delta_tol = 1e-10;
    int max_substeps = 40;
    double contraction_bound = 0.5;
    int max_retries = 4;
    DriftSource drift_source = DriftSource::first_substep;
    ParametrixOptions parametrix;
};

struct StepSolution {
    int index = 0;  ///< 0-based
    double rho_used = 0.0;
    double t_start = 0.0;  ///< physical time at the step seam
    Trajectory first_substep;  ///< u^{rho,1,l}
    Trajectory combined;       ///< summed Picard series for the step
};

struct GlobalSolution {
    Grid grid;
    double nu = 0.1;
    Schedule schedule;  ///< nominal schedule (before any retry halving)
    std::vector<StepSolution> steps;
    double initial_sup = 0.0;
    double running_sup = 0.0;

    double physical_time(int step_index, double tau) const;
    double final_physical_time() const;
    const VectorField& final_field() const;
};

/// First substep u^{rho,1,l}: drift is the initial-data trajectory for l = 0
/// and the previous step's trajectory (already shifted onto this tau span)
/// for l >= 1; zero source.
Trajectory first_substep(int step_index, const VectorField& initial,
                         const Trajectory& prev_drift, double rho_l, double nu,
                         Backend backend, int substeps, const ParametrixOptions& options = {});

struct StepResult {
    Trajectory first;
    Trajectory combined;
    PicardTrace trace;
};

/// One full Picard step: first substep, then corrections until
/// sup(delta) <= delta_tol or max_substeps, with rho halved and the step
/// retried if a measured contraction ratio exceeds contraction_bound.
/// Throws step_failure_error after max_retries.
StepResult picard_step(int step_index, const VectorField& initial,
                       const Trajectory& prev_drift, const Schedule& schedule, double nu,
                       const SchemeConfig& config);

struct RunResult {
    GlobalSolution solution;
    std::vector<PicardTrace> traces;
    ConstantEstimate constants;          ///< estimate used (or override echo)
    std::optional<std::string> failure;  ///< set if a step failed
    int failed_step = -1;
};

/// The global scheme: C_0 = max(sup|h|, 1e-3), schedule from c*_n (estimated
/// on h's grid unless overridden), picard_step per step, stitched seams.
/// Step failures are reported in the result with partial output retained.
RunResult run_global(const VectorField& h, double nu, int steps, const SchemeConfig& config,
                     std::optional<double> c_star_n_override = std::nullopt);

/// Max abs of du/dtau - rho_l (nu*Lap(u) - sum_j u_j du/dx_j) over the grid
/// at the interior snapshots nearest the sampled tau values.
double residual(const GlobalSolution& solution, std::span<const double> tau_samples);

}  // namespace burgers
