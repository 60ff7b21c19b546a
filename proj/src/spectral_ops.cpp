#include "burgers/spectral_ops.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "burgers/fft.hpp"

namespace burgers::spectral {

namespace {

// Applies one Fourier multiplier pass. The callback receives the squared mode
// magnitude |m|^2 and the signed mode along `grad_axis` (0 if grad_axis < 0).
template <typename Multiplier>
std::vector<double> multiplier_pass(const Grid& grid, std::span<const double> values,
                                    int grad_axis, Multiplier mult) {
    const int N = grid.points_per_axis;
    auto coef = fft::forward(grid.n, N, values);
    std::array<std::size_t, 3> stride{};
    {
        std::size_t s = 1;
        for (int a = grid.n - 1; a >= 0; --a) {
            stride[static_cast<std::size_t>(a)] = s;
            s *= static_cast<std::size_t>(N);
        }
    }
    for (std::size_t i = 0; i < coef.size(); ++i) {
        double m2 = 0.0;
        int m_axis = 0;
        bool axis_nyquist = false;
        for (int a = 0; a < grid.n; ++a) {
            const int k = static_cast<int>((i / stride[static_cast<std::size_t>(a)]) %
                                           static_cast<std::size_t>(N));
            const int m = fft::signed_mode(k, N);
            m2 += static_cast<double>(m) * static_cast<double>(m);
            if (a == grad_axis) {
                m_axis = m;
                axis_nyquist = (m == -N / 2);
            }
        }
        coef[i] *= mult(m2, m_axis, axis_nyquist);
    }
    return fft::inverse_real(grid.n, N, std::move(coef));
}

constexpr double four_pi2 = 4.0 * fft::pi * fft::pi;

}  // namespace

std::vector<double> heat(const Grid& grid, std::span<const double> values, double nu_t) {
    return multiplier_pass(grid, values, -1, [nu_t](double m2, int, bool) {
        return std::complex<double>(std::exp(-four_pi2 * nu_t * m2), 0.0);
    });
}

VectorField heat(const VectorField& field, double nu_t) {
    VectorField out = field;
    for (auto& comp : out.components) comp = heat(field.grid, comp, nu_t);
    return out;
}

std::vector<double> heat_gradient(const Grid& grid, std::span<const double> values,
                                  double nu_t, int axis) {
    return multiplier_pass(grid, values, axis, [nu_t](double m2, int m, bool nyq) {
        if (nyq) return std::complex<double>(0.0, 0.0);
        const double damp = std::exp(-four_pi2 * nu_t * m2);
        return std::complex<double>(0.0, 2.0 * fft::pi * static_cast<double>(m) * damp);
    });
}

std::vector<double> integrated_heat_gradient(const Grid& grid, std::span<const double> values,
                                             double nu, double horizon, int axis) {
    return multiplier_pass(grid, values, axis, [nu, horizon](double m2, int m, bool nyq) {
        if (nyq || m2 == 0.0) return std::complex<double>(0.0, 0.0);
        const double lambda = four_pi2 * nu * m2;
        const double integral = (1.0 - std::exp(-lambda * horizon)) / lambda;
        return std::complex<double>(0.0, 2.0 * fft::pi * static_cast<double>(m) * integral);
    });
}

std::vector<double> laplacian(const Grid& grid, std::span<const double> values) {
    return multiplier_pass(grid, values, -1, [](double m2, int, bool) {
        return std::complex<double>(-four_pi2 * m2, 0.0);
    });
}

}  // namespace burgers::spectral
