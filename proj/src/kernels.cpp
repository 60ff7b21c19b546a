#include "burgers/kernels.hpp"

#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/fft.hpp"
#include "burgers/spectral_ops.hpp"

namespace burgers {

namespace {

constexpr double min_time_gap = 1e-6;

void validate(const KernelParams& params) {
    if (params.nu <= 0.0) throw domain_error("kernel viscosity must be positive");
    if (params.n < 1 || params.n > 3) throw config_error("kernel dimension must be in [1,3]");
    if (params.lattice_truncation < 1)
        throw config_error("lattice_truncation must be at least 1");
}

double sup_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Enough images that the first discarded Gaussian tail is below 1e-16 of the
// peak; the configured truncation is the floor (sized for the smallest times).
int image_count(double t, double nu, int configured) {
    const int needed = 1 + static_cast<int>(std::ceil(6.5 * std::sqrt(4.0 * nu * t)));
    return std::max(configured, needed);
}

// One-axis image sum; pairs +g/-g images so the result is exactly even in z.
double periodized_axis(double t, double z, double nu, int images) {
    const double inv = 1.0 / (4.0 * nu * t);
    const double scale = 1.0 / std::sqrt(4.0 * fft::pi * nu * t);
    double total = std::exp(-z * z * inv);
    for (int g = 1; g <= images; ++g) {
        const double a = z - static_cast<double>(g);
        const double b = z + static_cast<double>(g);
        total += std::exp(-a * a * inv) + std::exp(-b * b * inv);
    }
    return scale * total;
}

struct SeriesContext {
    const Grid& grid;
    const DriftLookup& drift;
    double drift_scale;
    double nu;
    int time_nodes;
    double origin;  // s
};

// g_m(sigma), the m-th Levy iterate applied to f, as a field of xi.
std::vector<double> levy_iterate(const SeriesContext& ctx, std::span<const double> f,
                                 int m, double sigma) {
    const Grid& g = ctx.grid;
    std::vector<double> per_axis_sum(g.total_points(), 0.0);
    if (m == 1) {
        const VectorField& b = ctx.drift(sigma);
        for (int axis = 0; axis < g.n; ++axis) {
            const auto grad = spectral::heat_gradient(g, f, ctx.nu * (sigma - ctx.origin), axis);
            const auto& ba = b.components[static_cast<std::size_t>(axis)];
            for (std::size_t i = 0; i < grad.size(); ++i)
                per_axis_sum[i] += ba[i] * grad[i];
        }
    } else {
        // inner integral over sigma' in [s, sigma], sigma' = s + (sigma-s) w^2
        const double span = sigma - ctx.origin;
        std::vector<std::vector<double>> grad_acc(
            static_cast<std::size_t>(g.n), std::vector<double>(g.total_points(), 0.0));
        for (int q = 0; q < ctx.time_nodes; ++q) {
            const double w = (q + 0.5) / ctx.time_nodes;
            const double sigma_prime = ctx.origin + span * w * w;
            const double weight = 2.0 * span * w / ctx.time_nodes;
            const auto inner = levy_iterate(ctx, f, m - 1, sigma_prime);
            for (int axis = 0; axis < g.n; ++axis) {
                const auto grad =
                    spectral::heat_gradient(g, inner, ctx.nu * (sigma - sigma_prime), axis);
                auto& acc = grad_acc[static_cast<std::size_t>(axis)];
                for (std::size_t i = 0; i < grad.size(); ++i) acc[i] += weight * grad[i];
            }
        }
        const VectorField& b = ctx.drift(sigma);
        for (int axis = 0; axis < g.n; ++axis) {
            const auto& ba = b.components[static_cast<std::size_t>(axis)];
            const auto& acc = grad_acc[static_cast<std::size_t>(axis)];
            for (std::size_t i = 0; i < acc.size(); ++i) per_axis_sum[i] += ba[i] * acc[i];
        }
    }
    const double factor = -ctx.drift_scale;
    for (double& v : per_axis_sum) v *= factor;
    return per_axis_sum;
}

}  // namespace

double gaussian_kernel(double t, std::span<const double> x, const KernelParams& params) {
    validate(params);
    if (t <= 0.0) throw domain_error("gaussian_kernel requires t > 0");
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    const double denom = 4.0 * params.nu * t;
    return std::pow(4.0 * fft::pi * params.nu * t, -0.5 * params.n) * std::exp(-r2 / denom);
}

double periodized_gaussian(double t, std::span<const double> x, const KernelParams& params) {
    validate(params);
    if (t <= 0.0) throw domain_error("periodized_gaussian requires t > 0");
    const int images = image_count(t, params.nu, params.lattice_truncation);
    double prod = 1.0;
    for (int a = 0; a < params.n; ++a)
        prod *= periodized_axis(t, x[static_cast<std::size_t>(a)], params.nu, images);
    return prod;
}

std::vector<double> KernelMatrix::apply(std::span<const double> f) const {
    const int N = grid.points_per_axis;
    std::vector<double> out(static_cast<std::size_t>(N), 0.0);
    for (int x = 0; x < N; ++x) {
        double acc = 0.0;
        for (int y = 0; y < N; ++y) acc += at(x, y) * f[static_cast<std::size_t>(y)];
        out[static_cast<std::size_t>(x)] = acc * grid.spacing;
    }
    return out;
}

std::vector<double> parametrix_apply(const Grid& grid, std::span<const double> f,
                                     const DriftLookup& drift, double drift_scale,
                                     const ParametrixSeries& series, const KernelParams& params,
                                     double s, double t) {
    validate(params);
    if (series.truncation_order < 0 || series.truncation_order > 3)
        throw config_error("parametrix truncation order must be in [0,3]");
    if (series.quadrature_nodes_time < 2 || series.quadrature_nodes_space < 2)
        throw config_error("parametrix needs at least 2 quadrature nodes per direction");
    if (t - s < min_time_gap)
        throw step_too_small_error("parametrix time gap below 1e-6: " + std::to_string(t - s));

    std::vector<double> result = spectral::heat(grid, f, params.nu * (t - s));
    if (series.truncation_order == 0) return result;

    SeriesContext ctx{grid, drift, drift_scale, params.nu, series.quadrature_nodes_time, s};
    const double span = t - s;
    for (int m = 1; m <= series.truncation_order; ++m) {
        for (int q = 0; q < series.quadrature_nodes_time; ++q) {
            const double w = (q + 0.5) / series.quadrature_nodes_time;
            const double sigma = s + span * w * w;
            const double weight = 2.0 * span * w / series.quadrature_nodes_time;
            const auto g_m = levy_iterate(ctx, f, m, sigma);
            const auto smoothed = spectral::heat(grid, g_m, params.nu * (t - sigma));
            for (std::size_t i = 0; i < result.size(); ++i) result[i] += weight * smoothed[i];
        }
    }
    return result;
}

KernelMatrix parametrix_correction(const DriftLookup& drift, const ParametrixSeries& series,
                                   const KernelParams& params, const Grid& grid,
                                   double s, double t) {
    if (grid.n != 1)
        throw config_error("parametrix_correction assembles dense kernels for n=1 only");
    const int N = grid.points_per_axis;
    KernelMatrix km;
    km.grid = grid;
    km.s = s;
    km.t = t;
    km.values.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), 0.0);

    std::vector<double> unit(static_cast<std::size_t>(N), 0.0);
    for (int y = 0; y < N; ++y) {
        unit[static_cast<std::size_t>(y)] = 1.0 / grid.spacing;
        const auto column = parametrix_apply(grid, unit, drift, 1.0, series, params, s, t);
        unit[static_cast<std::size_t>(y)] = 0.0;
        for (int x = 0; x < N; ++x)
            km.values[static_cast<std::size_t>(x) * static_cast<std::size_t>(N) +
                      static_cast<std::size_t>(y)] = column[static_cast<std::size_t>(x)];
    }
    return km;
}

ConstantEstimate estimate_cstar(const KernelParams& params, const Grid& probe_grid) {
    validate(params);
    if (probe_grid.n != params.n)
        throw shape_error("estimate_cstar: probe grid dimension differs from params");
    if (probe_grid.points_per_axis < 64)
        throw config_error("estimate_cstar needs probe resolution >= 64 per axis");

    struct Probe {
        std::string name;
        VectorField field;
    };
    std::vector<Probe> probes;
    auto add = [&](const std::string& name, const ScalarFunction& f) {
        probes.push_back({name, sample_scalar(probe_grid, f)});
    };
    const double two_pi = 2.0 * fft::pi;

    add("const", [](std::span<const double>) { return 1.0; });
    for (int a = 0; a < params.n; ++a) {
        add("sin(2pi x" + std::to_string(a) + ")",
            [a, two_pi](std::span<const double> x) { return std::sin(two_pi * x[static_cast<std::size_t>(a)]); });
        add("cos(2pi x" + std::to_string(a) + ")",
            [a, two_pi](std::span<const double> x) { return std::cos(two_pi * x[static_cast<std::size_t>(a)]); });
        add("sin(4pi x" + std::to_string(a) + ")",
            [a, two_pi](std::span<const double> x) { return std::sin(2.0 * two_pi * x[static_cast<std::size_t>(a)]); });
    }
    for (int a = 0; a < params.n; ++a) {
        for (int b = a + 1; b < params.n; ++b) {
            add("sin(2pi x" + std::to_string(a) + ")sin(2pi x" + std::to_string(b) + ")",
                [a, b, two_pi](std::span<const double> x) {
                    return std::sin(two_pi * x[static_cast<std::size_t>(a)]) *
                           std::sin(two_pi * x[static_cast<std::size_t>(b)]);
                });
            add("sin(2pi x" + std::to_string(a) + ")cos(2pi x" + std::to_string(b) + ")",
                [a, b, two_pi](std::span<const double> x) {
                    return std::sin(two_pi * x[static_cast<std::size_t>(a)]) *
                           std::cos(two_pi * x[static_cast<std::size_t>(b)]);
                });
        }
    }

    ConstantEstimate est;
    est.probe_report.clear();
    double measured = 1.0;
    for (const auto& probe : probes) {
        const auto& values = probe.field.components[0];
        const double base = sup_abs(values);
        if (base < 1e-14) continue;  // degenerate probe

        const auto heated = spectral::heat(probe_grid, values, params.nu * 1.0);
        const double amp_heat = sup_abs(heated) / base;
        est.probe_report.emplace_back("heat|" + probe.name, amp_heat);
        measured = std::max(measured, amp_heat);

        for (int axis = 0; axis < params.n; ++axis) {
            const auto ig =
                spectral::integrated_heat_gradient(probe_grid, values, params.nu, 1.0, axis);
            const double amp_grad = sup_abs(ig) / base;
            est.probe_report.emplace_back(
                "intgrad" + std::to_string(axis) + "|" + probe.name, amp_grad);
            measured = std::max(measured, amp_grad);
        }
    }

    est.c_star = measured;  // already clamped to >= 1 by initialization
    est.c_star_n = c_star_n_from(est.c_star, params.n);
    return est;
}

}  // namespace burgers
