#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers {

/// Parameters of the scalar kernel equation  w_t = nu*Lap(w) - sum_j b_j dw/dx_j.
struct KernelParams {
    double nu = 0.1;           ///< diffusion constant, > 0
    int n = 1;                 ///< dimension
    int lattice_truncation = 5;  ///< image terms per axis for torus periodization
};

/// Truncation and quadrature knobs for the Levy series.
/// Spatial composition integrals run on the grid itself (product trapezoid
/// rule at grid resolution); quadrature_nodes_space records the requested
/// per-axis count and is clamped to the grid.
struct ParametrixSeries {
    int truncation_order = 1;      ///< M: number of correction terms kept
    int quadrature_nodes_time = 12;
    int quadrature_nodes_space = 64;
};

/// Empirically probed kernel-amplification constants.
struct ConstantEstimate {
    double c_star = 1.0;    ///< max measured amplification, clamped to >= 1
    double c_star_n = 4.0;  ///< (2 + n + n^2) * c_star^3
    std::vector<std::pair<std::string, double>> probe_report;
};

/// Whole-space Gaussian (4 pi nu t)^{-n/2} exp(-|x|^2 / (4 nu t)).
double gaussian_kernel(double t, std::span<const double> x, const KernelParams& params);

/// Lattice-image sum of the Gaussian over Z^n within lattice_truncation
/// images per axis; integrates to 1 over the unit cell.
double periodized_gaussian(double t, std::span<const double> x, const KernelParams& params);

/// Drift coefficients sampled in time; must stay valid for the call duration.
using DriftLookup = std::function<const VectorField&(double sigma)>;

/// Dense kernel p_M(t, x; s, y) on all grid pairs; n = 1 only.
struct KernelMatrix {
    Grid grid;
    double s = 0.0;
    double t = 0.0;
    std::vector<double> values;  ///< row-major, values[x * N + y]

    double at(int x_index, int y_index) const {
        return values[static_cast<std::size_t>(x_index) *
                          static_cast<std::size_t>(grid.points_per_axis) +
                      static_cast<std::size_t>(y_index)];
    }
    /// h * sum_y p(x, y) f(y) for every x.
    std::vector<double> apply(std::span<const double> f) const;
};

/// Truncated Levy series for the fundamental solution of the kernel
/// equation with drift b: p_M = N* + sum_{m=1..M} N* (*) (K)_m, where
/// K = -sum_j b_j dN*/dx_j and (K)_{m+1} = K (*) (K)_m (space-time
/// composition). Time integrals use midpoint nodes under sigma = s + (t-s) w^2.
KernelMatrix parametrix_correction(const DriftLookup& drift, const ParametrixSeries& series,
                                   const KernelParams& params, const Grid& grid,
                                   double s, double t);

/// Action of the same truncated series on a field, factored through Fourier
/// convolutions; works in any supported dimension and is the entry point the
/// parametrix solver backend uses. drift_scale premultiplies b.
std::vector<double> parametrix_apply(const Grid& grid, std::span<const double> f,
                                     const DriftLookup& drift, double drift_scale,
                                     const ParametrixSeries& series, const KernelParams& params,
                                     double s, double t);

/// Probes discrete operator norms of convolution with N* (at horizon 1) and
/// with the time-integrated gradient kernel over a unit interval, on a fixed
/// battery of single-mode trigonometric fields. Deterministic.
ConstantEstimate estimate_cstar(const KernelParams& params, const Grid& probe_grid);

/// c_star -> c_star_n bookkeeping shared with the schedule builder.
inline double c_star_n_from(double c_star, int n) {
    return (2.0 + n + static_cast<double>(n) * n) * c_star * c_star * c_star;
}

}  // namespace burgers
