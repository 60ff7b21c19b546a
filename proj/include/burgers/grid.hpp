#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace burgers {

/// Uniform periodic lattice on the unit n-torus [0,1)^n.
struct Grid {
    int n = 1;                ///< dimension, 1 <= n <= 3
    int points_per_axis = 8;  ///< power of two, >= 8
    double spacing = 0.125;   ///< 1 / points_per_axis

    std::size_t total_points() const {
        std::size_t t = 1;
        for (int a = 0; a < n; ++a) t *= static_cast<std::size_t>(points_per_axis);
        return t;
    }
    bool operator==(const Grid& other) const {
        return n == other.n && points_per_axis == other.points_per_axis;
    }
};

Grid make_grid(int n, int points_per_axis);

/// n-component real field sampled on a Grid at one time instant.
/// Components are stored row-major over the multi-index (i_0,...,i_{n-1})
/// with the last axis contiguous; periodicity is index arithmetic mod
/// points_per_axis.
struct VectorField {
    Grid grid;
    std::vector<std::vector<double>> components;
    double time_tag = 0.0;

    VectorField() = default;
    explicit VectorField(const Grid& g, double tag = 0.0)
        : grid(g), components(static_cast<std::size_t>(g.n),
                              std::vector<double>(g.total_points(), 0.0)),
          time_tag(tag) {}
};

/// Per-instant discrete norms; sup <= c01 <= c12 by construction.
struct NormReport {
    double sup = 0.0;
    double c01 = 0.0;
    double c12 = 0.0;
    std::vector<double> per_component_sup;
};

using FieldFunction = std::function<void(std::span<const double> x, std::span<double> out)>;
using ScalarFunction = std::function<double(std::span<const double> x)>;

/// Evaluate f at every grid node; throws evaluation_error on non-finite values.
VectorField sample(const Grid& grid, const FieldFunction& f);

/// Single-component convenience sampler.
VectorField sample_scalar(const Grid& grid, const ScalarFunction& f);

/// Decode a linear index into the multi-index (i_0,...,i_{n-1}).
void decode_index(const Grid& grid, std::size_t linear, std::span<int> multi);

/// Discrete |.|_0: max over components and nodes of |value|.
double sup_norm(const VectorField& field);

/// Fourier differentiation along one axis; order is 1 or 2. Exact for
/// resolved trigonometric polynomials. Odd orders zero the Nyquist mode.
VectorField spectral_derivative(const VectorField& field, int axis, int order);

/// Discrete |.|_{0,1}: sup_norm + sum over axes of sup_norm of the first
/// derivative (each term maximized over components).
double c01_norm(const VectorField& field);

/// Discrete |.|_{1,2}: c01 terms + sup of the supplied instantaneous time
/// derivative + sum of all second-derivative sups.
double c12_norm(const VectorField& field, const VectorField& time_derivative);

NormReport norm_report(const VectorField& field, const VectorField& time_derivative);

/// du2/dx1 - du1/dx2 as a one-component field; requires n = 2.
VectorField curl2d(const VectorField& field);

// Field arithmetic used throughout the solver.
VectorField zero_like(const VectorField& field);
void add_scaled(VectorField& dst, const VectorField& src, double factor);  // dst += factor*src
void require_same_shape(const VectorField& a, const VectorField& b, const char* what);

}  // namespace burgers
