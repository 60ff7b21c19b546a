#include "burgers/compactify.hpp"

#include <cmath>

#include "burgers/errors.hpp"
#include "burgers/fft.hpp"

namespace burgers {

namespace {

void require_interior(const CompactPoint& p) {
    for (int a = 0; a < p.n; ++a)
        if (std::abs(p.y[static_cast<std::size_t>(a)]) >= fft::pi / 2.0)
            throw domain_error("compact point on or outside the boundary of (-pi/2, pi/2)^n");
}

void require_axis(const CompactPoint& p, int j) {
    if (j < 0 || j >= p.n) throw config_error("compactify axis out of range");
}

}  // namespace

CompactPoint to_compact(std::span<const double> x) {
    if (x.empty() || x.size() > 3) throw config_error("to_compact supports 1 <= n <= 3");
    CompactPoint p;
    p.n = static_cast<int>(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) p.y[a] = std::atan(x[a]);
    return p;
}

std::vector<double> from_compact(const CompactPoint& p) {
    require_interior(p);
    std::vector<double> x(static_cast<std::size_t>(p.n));
    for (int a = 0; a < p.n; ++a)
        x[static_cast<std::size_t>(a)] = std::tan(p.y[static_cast<std::size_t>(a)]);
    return x;
}

double first_derivative_factor(const CompactPoint& p, int j) {
    require_interior(p);
    require_axis(p, j);
    const double tj = std::tan(p.y[static_cast<std::size_t>(j)]);
    return 1.0 / (1.0 + tj * tj);
}

std::pair<double, double> second_derivative_terms(const CompactPoint& p, int j, int k) {
    require_interior(p);
    require_axis(p, j);
    require_axis(p, k);
    const double tj = std::tan(p.y[static_cast<std::size_t>(j)]);
    const double fj = 1.0 + tj * tj;
    const double c1 = 1.0 / (fj * fj);
    if (j != k) return {c1, 0.0};
    const double tk = std::tan(p.y[static_cast<std::size_t>(k)]);
    const double fk = 1.0 + tk * tk;
    const double c2 = -2.0 * tk / (fj * fk);
    return {c1, c2};
}

}  // namespace burgers
