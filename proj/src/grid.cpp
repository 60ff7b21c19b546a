#include "burgers/grid.hpp"

#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/fft.hpp"

namespace burgers {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

Grid make_grid(int n, int points_per_axis) {
    if (n < 1 || n > 3)
        throw config_error("grid dimension must be in [1,3], got " + std::to_string(n));
    if (points_per_axis < 8 || !is_power_of_two(points_per_axis))
        throw config_error("points_per_axis must be a power of two >= 8, got " +
                           std::to_string(points_per_axis));
    Grid g;
    g.n = n;
    g.points_per_axis = points_per_axis;
    g.spacing = 1.0 / static_cast<double>(points_per_axis);
    return g;
}

void decode_index(const Grid& grid, std::size_t linear, std::span<int> multi) {
    for (int a = grid.n - 1; a >= 0; --a) {
        multi[static_cast<std::size_t>(a)] =
            static_cast<int>(linear % static_cast<std::size_t>(grid.points_per_axis));
        linear /= static_cast<std::size_t>(grid.points_per_axis);
    }
}

VectorField sample(const Grid& grid, const FieldFunction& f) {
    VectorField field(grid);
    const std::size_t total = grid.total_points();
    std::array<double, 3> x{};
    std::array<double, 3> out{};
    std::array<int, 3> idx{};
    for (std::size_t i = 0; i < total; ++i) {
        decode_index(grid, i, std::span<int>(idx.data(), static_cast<std::size_t>(grid.n)));
        for (int a = 0; a < grid.n; ++a)
            x[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a)] * grid.spacing;
        f(std::span<const double>(x.data(), static_cast<std::size_t>(grid.n)),
          std::span<double>(out.data(), static_cast<std::size_t>(grid.n)));
        for (int c = 0; c < grid.n; ++c) {
            const double v = out[static_cast<std::size_t>(c)];
            if (!std::isfinite(v))
                throw evaluation_error("non-finite sample value at node " + std::to_string(i));
            field.components[static_cast<std::size_t>(c)][i] = v;
        }
    }
    return field;
}

VectorField sample_scalar(const Grid& grid, const ScalarFunction& f) {
    VectorField field;
    field.grid = grid;
    field.components.resize(1);
    field.components[0].resize(grid.total_points());
    std::array<double, 3> x{};
    std::array<int, 3> idx{};
    for (std::size_t i = 0; i < grid.total_points(); ++i) {
        decode_index(grid, i, std::span<int>(idx.data(), static_cast<std::size_t>(grid.n)));
        for (int a = 0; a < grid.n; ++a)
            x[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a)] * grid.spacing;
        const double v = f(std::span<const double>(x.data(), static_cast<std::size_t>(grid.n)));
        if (!std::isfinite(v))
            throw evaluation_error("non-finite scalar sample at node " + std::to_string(i));
        field.components[0][i] = v;
    }
    return field;
}

double sup_norm(const VectorField& field) {
    double m = 0.0;
    for (const auto& comp : field.components)
        for (double v : comp) m = std::max(m, std::abs(v));
    return m;
}

VectorField spectral_derivative(const VectorField& field, int axis, int order) {
    if (axis < 0 || axis >= field.grid.n)
        throw config_error("derivative axis out of range");
    if (order != 1 && order != 2)
        throw config_error("derivative order must be 1 or 2");

    const Grid& g = field.grid;
    const int N = g.points_per_axis;
    VectorField out(g, field.time_tag);
    out.components.resize(field.components.size());

    for (std::size_t c = 0; c < field.components.size(); ++c) {
        auto coef = fft::forward(g.n, N, field.components[c]);
        std::size_t stride = 1;
        for (int a = g.n - 1; a > axis; --a) stride *= static_cast<std::size_t>(N);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            const int k = static_cast<int>((i / stride) % static_cast<std::size_t>(N));
            const int m = fft::signed_mode(k, N);
            const double w = 2.0 * fft::pi * static_cast<double>(m);
            if (order == 1) {
                // i*w multiplier; drop the unmatched Nyquist mode
                coef[i] = (m == -N / 2) ? std::complex<double>(0.0, 0.0)
                                        : coef[i] * std::complex<double>(0.0, w);
            } else {
                coef[i] *= -w * w;
            }
        }
        out.components[c] = fft::inverse_real(g.n, N, std::move(coef));
    }
    return out;
}

double c01_norm(const VectorField& field) {
    double total = sup_norm(field);
    for (int axis = 0; axis < field.grid.n; ++axis)
        total += sup_norm(spectral_derivative(field, axis, 1));
    return total;
}

double c12_norm(const VectorField& field, const VectorField& time_derivative) {
    require_same_shape(field, time_derivative, "c12_norm");
    double total = c01_norm(field) + sup_norm(time_derivative);
    for (int i = 0; i < field.grid.n; ++i) {
        const VectorField di = spectral_derivative(field, i, 1);
        for (int j = 0; j < field.grid.n; ++j)
            total += (i == j) ? sup_norm(spectral_derivative(field, i, 2))
                              : sup_norm(spectral_derivative(di, j, 1));
    }
    return total;
}

NormReport norm_report(const VectorField& field, const VectorField& time_derivative) {
    NormReport r;
    r.sup = sup_norm(field);
    r.c01 = c01_norm(field);
    r.c12 = c12_norm(field, time_derivative);
    r.per_component_sup.reserve(field.components.size());
    for (const auto& comp : field.components) {
        double m = 0.0;
        for (double v : comp) m = std::max(m, std::abs(v));
        r.per_component_sup.push_back(m);
    }
    return r;
}

VectorField curl2d(const VectorField& field) {
    if (field.grid.n != 2)
        throw dimension_error("curl2d requires a two-dimensional field");
    const VectorField d2d1 = spectral_derivative(field, 0, 1);  // d/dx1 of both components
    const VectorField d1d2 = spectral_derivative(field, 1, 1);  // d/dx2 of both components
    VectorField out;
    out.grid = field.grid;
    out.time_tag = field.time_tag;
    out.components.resize(1);
    out.components[0].resize(field.grid.total_points());
    for (std::size_t i = 0; i < out.components[0].size(); ++i)
        out.components[0][i] = d2d1.components[1][i] - d1d2.components[0][i];
    return out;
}

VectorField zero_like(const VectorField& field) {
    VectorField out;
    out.grid = field.grid;
    out.time_tag = field.time_tag;
    out.components.assign(field.components.size(),
                          std::vector<double>(field.grid.total_points(), 0.0));
    return out;
}

void add_scaled(VectorField& dst, const VectorField& src, double factor) {
    require_same_shape(dst, src, "add_scaled");
    for (std::size_t c = 0; c < dst.components.size(); ++c)
        for (std::size_t i = 0; i < dst.components[c].size(); ++i)
            dst.components[c][i] += factor * src.components[c][i];
}

void require_same_shape(const VectorField& a, const VectorField& b, const char* what) {
    if (!(a.grid == b.grid) || a.components.size() != b.components.size())
        throw shape_error(std::string(what) + ": fields live on different grids");
}

}  // namespace burgers
