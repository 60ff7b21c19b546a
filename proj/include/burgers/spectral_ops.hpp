#pragma once

#include <span>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers::spectral {

/// Heat semigroup e^{nu_t * Laplacian}: multiplier exp(-4 pi^2 nu_t |m|^2).
std::vector<double> heat(const Grid& grid, std::span<const double> values, double nu_t);
VectorField heat(const VectorField& field, double nu_t);

/// d/dx_axis of the heat-evolved field (Nyquist mode dropped on the axis).
std::vector<double> heat_gradient(const Grid& grid, std::span<const double> values,
                                  double nu_t, int axis);

/// Time-integrated gradient of the semigroup over [0, horizon]:
/// multiplier (2 pi i m_axis) (1 - exp(-4 pi^2 nu |m|^2 horizon)) / (4 pi^2 nu |m|^2).
std::vector<double> integrated_heat_gradient(const Grid& grid, std::span<const double> values,
                                             double nu, double horizon, int axis);

/// Sum of second derivatives along all axes.
std::vector<double> laplacian(const Grid& grid, std::span<const double> values);

}  // namespace burgers::spectral
