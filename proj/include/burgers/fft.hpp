#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace burgers::fft {

inline constexpr double pi = 3.14159265358979323846;

/// In-place radix-2 transform of a power-of-two-length buffer.
/// Forward uses e^{-2*pi*i*km/N} and is unnormalized; the inverse divides by N.
void transform(std::span<std::complex<double>> a, bool inverse);

/// Apply the 1-D transform along one axis of a row-major N^ndim array
/// (axis ndim-1 is contiguous).
void transform_axis(std::vector<std::complex<double>>& data, int ndim, int points,
                    int axis, bool inverse);

/// Full n-dimensional forward transform of a real array.
std::vector<std::complex<double>> forward(int ndim, int points, std::span<const double> values);

/// Full n-dimensional inverse transform, returning the real part.
std::vector<double> inverse_real(int ndim, int points, std::vector<std::complex<double>> coef);

/// Signed Fourier mode for bin k of an N-point transform: k for k < N/2, k-N otherwise.
inline int signed_mode(int k, int points) { return k < points / 2 ? k : k - points; }

}  // namespace burgers::fft
