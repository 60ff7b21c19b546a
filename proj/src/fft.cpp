#include "burgers/fft.hpp"

#include <cmath>

namespace burgers::fft {

void transform(std::span<std::complex<double>> a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> twiddle(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k)
            twiddle[k] = std::polar(1.0, ang * static_cast<double>(k));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * twiddle[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= scale;
    }
}

void transform_axis(std::vector<std::complex<double>>& data, int ndim, int points,
                    int axis, bool inverse) {
    std::size_t stride = 1;
    for (int a = ndim - 1; a > axis; --a) stride *= static_cast<std::size_t>(points);
    const std::size_t block = stride * static_cast<std::size_t>(points);
    const std::size_t total = data.size();

    std::vector<std::complex<double>> line(static_cast<std::size_t>(points));
    for (std::size_t outer = 0; outer < total; outer += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t base = outer + inner;
            for (int k = 0; k < points; ++k)
                line[static_cast<std::size_t>(k)] = data[base + static_cast<std::size_t>(k) * stride];
            transform(line, inverse);
            for (int k = 0; k < points; ++k)
                data[base + static_cast<std::size_t>(k) * stride] = line[static_cast<std::size_t>(k)];
        }
    }
}

std::vector<std::complex<double>> forward(int ndim, int points, std::span<const double> values) {
    std::vector<std::complex<double>> coef(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) coef[i] = values[i];
    for (int axis = 0; axis < ndim; ++axis) transform_axis(coef, ndim, points, axis, false);
    return coef;
}

std::vector<double> inverse_real(int ndim, int points, std::vector<std::complex<double>> coef) {
    for (int axis = 0; axis < ndim; ++axis) transform_axis(coef, ndim, points, axis, true);
    std::vector<double> out(coef.size());
    for (std::size_t i = 0; i < coef.size(); ++i) out[i] = coef[i].real();
    return out;
}

}  // namespace burgers::fft
