#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace burgers {

/// Point in the compactified cube (-pi/2, pi/2)^n under y_i = arctan(x_i).
struct CompactPoint {
    int n = 1;
    std::array<double, 3> y{};
};

CompactPoint to_compact(std::span<const double> x);

/// Componentwise tan; throws domain_error on boundary points.
std::vector<double> from_compact(const CompactPoint& p);

/// du/dx_j = du~/dy_j * factor, factor = 1 / (1 + tan^2(y_j)).
double first_derivative_factor(const CompactPoint& p, int j);

/// Coefficients (c1, c2) so that d2u/dx_j dx_k = u~_{y_j y_j} c1 + u~_{y_j} c2,
/// with c1 = 1/(1+tan^2 y_j)^2 and c2 = -delta_jk 2 tan(y_k) /
/// ((1+tan^2 y_j)(1+tan^2 y_k)); the displayed identity covers the diagonal
/// case, and c2 vanishes off it.
std::pair<double, double> second_derivative_terms(const CompactPoint& p, int j, int k);

}  // namespace burgers
