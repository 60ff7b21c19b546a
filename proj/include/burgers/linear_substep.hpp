#pragma once

#include <vector>

#include "burgers/grid.hpp"
#include "burgers/kernels.hpp"

namespace burgers {

enum class Backend { spectral, parametrix };

/// A discrete trajectory: fields plus their instantaneous right-hand sides,
/// at strictly increasing time tags. Lookups between tags are
/// piecewise-constant from the left.
struct Trajectory {
    std::vector<VectorField> snapshots;
    std::vector<VectorField> rhs_snapshots;

    double tau_start() const { return snapshots.front().time_tag; }
    double tau_end() const { return snapshots.back().time_tag; }
    std::size_t size() const { return snapshots.size(); }

    const VectorField& at_or_before(double tau) const;
    const VectorField& rhs_at_or_before(double tau) const;

    /// Constant-in-time trajectory of a single field (rhs zero).
    static Trajectory constant(const VectorField& f, double tau_start, double tau_end);

    /// Copy with all time tags moved by offset.
    Trajectory shifted(double offset) const;

    void validate() const;
};

/// One scalar-linearized subproblem
///     dw/dtau = rho (nu*Lap(w) - sum_j b_j dw/dx_j) + source,
/// posed over a unit tau span. Null drift/source mean zero.
struct LinearProblem {
    double rho = 1.0;
    double nu = 0.1;
    const Trajectory* drift = nullptr;
    const Trajectory* source = nullptr;
    VectorField initial;
    double tau_start = 0.0;
    double tau_end = 1.0;
};

/// Extra knobs consumed only by the parametrix backend.
struct ParametrixOptions {
    ParametrixSeries series;
    int source_time_nodes = 8;  ///< midpoint nodes for the source path integral
};

/// Solve the subproblem. Spectral backend: exact Fourier diffusion per stage
/// with explicit advection/source coupling over `substeps` stages.
/// Parametrix backend: truncated Levy-series representation evaluated at
/// `substeps`+1 snapshot times.
Trajectory solve_linear(const LinearProblem& problem, Backend backend, int substeps,
                        const ParametrixOptions& options = {});

/// Builds and solves the correction problem: drift = u_prev, zero initial
/// data, source_i = -rho sum_j delta_prev_j d(u_prev_i)/dx_j. Returns the
/// next Picard correction.
Trajectory solve_correction(const Trajectory& u_prev, const Trajectory& delta_prev,
                            double rho, double nu, Backend backend, int substeps,
                            const ParametrixOptions& options = {});

/// Solves with both backends and returns the sup discrepancy at tau_end.
double cross_check_backends(const LinearProblem& problem, int substeps,
                            const ParametrixOptions& options = {});

}  // namespace burgers
