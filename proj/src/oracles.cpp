#include "burgers/oracles.hpp"

#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/spectral_ops.hpp"

namespace burgers {

VectorField hopf_cole_solution(const PotentialData& data, double t, const Grid& grid) {
    if (t < 0.0) throw domain_error("hopf_cole_solution requires t >= 0");
    if (data.nu <= 0.0) throw domain_error("hopf_cole_solution requires nu > 0");

    const VectorField phi = sample_scalar(grid, data.phi0);
    std::vector<double> alpha0(grid.total_points());
    for (std::size_t i = 0; i < alpha0.size(); ++i) {
        alpha0[i] = std::exp(phi.components[0][i] / (2.0 * data.nu));
        if (alpha0[i] < 1e-300)
            throw overflow_guard_error("hopf_cole_solution: alpha underflow, rescale phi0");
    }

    const std::vector<double> alpha =
        (t == 0.0) ? alpha0 : spectral::heat(grid, alpha0, data.nu * t);

    VectorField alpha_field;
    alpha_field.grid = grid;
    alpha_field.components.push_back(alpha);

    VectorField u(grid, t);
    for (int axis = 0; axis < grid.n; ++axis) {
        const VectorField dalpha = spectral_derivative(alpha_field, axis, 1);
        auto& comp = u.components[static_cast<std::size_t>(axis)];
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (alpha[i] < 1e-300)
                throw overflow_guard_error("hopf_cole_solution: evolved alpha underflow");
            comp[i] = -2.0 * data.nu * dalpha.components[0][i] / alpha[i];
        }
    }
    return u;
}

std::pair<bool, double> check_max_principle(const GlobalSolution& solution) {
    double running = solution.initial_sup;
    for (const auto& step : solution.steps)
        for (const auto& snap : step.combined.snapshots)
            running = std::max(running, sup_norm(snap));
    const double margin = std::max(0.0, running - solution.initial_sup);
    return {running <= solution.initial_sup + 1e-6, margin};
}

double check_uniqueness(const VectorField& h, double nu, int steps, const SchemeConfig& base,
                        std::optional<double> c_star_n_override) {
    if (h.grid.n > 2 || h.grid.points_per_axis > 128)
        throw config_error("check_uniqueness expects n <= 2 and grid <= 128");

    SchemeConfig config_a = base;
    config_a.backend = Backend::spectral;

    SchemeConfig config_b = base;
    if (h.grid.n == 1) {
        // Levy-series route: fewer snapshots (quadrature-based, not
        // stability-limited) and two correction terms in the kernel.
        config_b.backend = Backend::parametrix;
        config_b.substeps = std::max(8, base.substeps / 4);
        config_b.parametrix.series.truncation_order = 2;
    } else {
        config_b.backend = Backend::spectral;
        config_b.substeps = 2 * base.substeps;
    }

    const RunResult a = run_global(h, nu, steps, config_a, c_star_n_override);
    const RunResult b = run_global(h, nu, steps, config_b, c_star_n_override);
    if (a.failure) throw numeric_error("check_uniqueness run A failed: " + *a.failure);
    if (b.failure) throw numeric_error("check_uniqueness run B failed: " + *b.failure);

    VectorField diff = a.solution.final_field();
    add_scaled(diff, b.solution.final_field(), -1.0);
    return sup_norm(diff);
}

bool decay_weight_probe(const std::function<double(double)>& second_derivative,
                        double half_width, int samples) {
    if (half_width <= 0.0 || samples < 4)
        throw config_error("decay_weight_probe needs a positive interval and >= 4 samples");

    auto weighted = [&](double x) {
        const double w = 1.0 + x * x;
        return w * w * w * std::abs(second_derivative(x));
    };
    // outer half toward each boundary must be non-increasing in |x|
    for (int sign = -1; sign <= 1; sign += 2) {
        for (int i = samples / 2; i < samples; ++i) {
            const double x0 = sign * half_width * static_cast<double>(i) / samples;
            const double x1 = sign * half_width * static_cast<double>(i + 1) / samples;
            if (weighted(x1) > weighted(x0) * (1.0 + 1e-9) + 1e-300) return false;
        }
    }
    return true;
}

}  // namespace burgers
