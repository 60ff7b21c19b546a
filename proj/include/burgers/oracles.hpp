#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "burgers/grid.hpp"
#include "burgers/outer_scheme.hpp"

namespace burgers {

/// Band-limited potential for exact Hopf-Cole reference solutions.
struct PotentialData {
    ScalarFunction phi0;  ///< sampler on [0,1)^n, finitely many Fourier modes
    double nu = 0.1;
};

/// Exact Burgers solution for potential data u(0) = -grad(phi0):
/// alpha0 = exp(phi0 / (2 nu)) evolved by the Fourier heat semigroup,
/// u = -2 nu grad(alpha) / alpha sampled on the grid.
VectorField hopf_cole_solution(const PotentialData& data, double t, const Grid& grid);

/// pass iff the running sup norm never exceeds the initial sup + 1e-6;
/// margin is the measured excess (0 when none).
std::pair<bool, double> check_max_principle(const GlobalSolution& solution);

/// Runs the global scheme twice (different backends where feasible, different
/// substep counts) and returns the sup discrepancy of the final fields.
double check_uniqueness(const VectorField& h, double nu, int steps, const SchemeConfig& base,
                        std::optional<double> c_star_n_override = std::nullopt);

/// Qualitative whole-space decay check: (1+x^2)^3 |f2(x)| non-increasing
/// toward both ends of [-half_width, half_width] on the outer half.
bool decay_weight_probe(const std::function<double(double)>& second_derivative,
                        double half_width, int samples);

}  // namespace burgers
