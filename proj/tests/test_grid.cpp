#include <doctest.h>

#include <cmath>
#include <random>

#include "burgers/errors.hpp"
#include "burgers/grid.hpp"

using namespace burgers;

namespace {

constexpr double two_pi = 2.0 * 3.14159265358979323846;

VectorField sine_field_1d(int points) {
    return sample(make_grid(1, points), [](std::span<const double> x, std::span<double> out) {
        out[0] = std::sin(two_pi * x[0]);
    });
}

// band-limited random field with modes |m| <= 4, deterministic seed
VectorField random_band_limited(const Grid& grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    struct Mode {
        int axis;
        int m;
        double a;
        double phase;
    };
    std::vector<std::vector<Mode>> modes(static_cast<std::size_t>(grid.n));
    for (int c = 0; c < grid.n; ++c)
        for (int axis = 0; axis < grid.n; ++axis)
            for (int m = 1; m <= 4; ++m)
                modes[static_cast<std::size_t>(c)].push_back(
                    {axis, m, amp(rng), two_pi * 0.25 * amp(rng)});
    return sample(grid, [&modes](std::span<const double> x, std::span<double> out) {
        for (std::size_t c = 0; c < out.size(); ++c) {
            double v = 0.0;
            for (const auto& mode : modes[c])
                v += mode.a * std::sin(two_pi * mode.m * x[static_cast<std::size_t>(mode.axis)] +
                                       mode.phase);
            out[c] = v;
        }
    });
}

VectorField rolled(const VectorField& f, int shift_per_axis) {
    const Grid& g = f.grid;
    VectorField out = f;
    const int N = g.points_per_axis;
    std::array<int, 3> idx{};
    for (std::size_t c = 0; c < f.components.size(); ++c) {
        for (std::size_t i = 0; i < f.components[c].size(); ++i) {
            decode_index(g, i, std::span<int>(idx.data(), static_cast<std::size_t>(g.n)));
            std::size_t j = 0;
            for (int a = 0; a < g.n; ++a)
                j = j * static_cast<std::size_t>(N) +
                    static_cast<std::size_t>((idx[static_cast<std::size_t>(a)] + shift_per_axis) % N);
            out.components[c][j] = f.components[c][i];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("make_grid accepts valid shapes and rejects bad ones") {
    const Grid g1 = make_grid(1, 64);
    CHECK(g1.n == 1);
    CHECK(g1.spacing == 1.0 / 64);
    CHECK(g1.spacing * g1.points_per_axis == 1.0);

    const Grid g2 = make_grid(2, 32);
    CHECK(g2.n == 2);
    CHECK(g2.spacing == 1.0 / 32);
    CHECK(g2.total_points() == 1024);

    CHECK_THROWS_AS(make_grid(1, 7), config_error);
    CHECK_THROWS_AS(make_grid(0, 64), config_error);
    CHECK_THROWS_AS(make_grid(4, 64), config_error);
    CHECK_THROWS_AS(make_grid(1, 4), config_error);
}

TEST_CASE("sample places values at the lattice nodes") {
    const Grid g = make_grid(1, 64);
    const VectorField zero = sample(g, [](std::span<const double>, std::span<double> out) {
        out[0] = 0.0;
    });
    for (double v : zero.components[0]) CHECK(v == 0.0);

    const VectorField sine = sine_field_1d(64);
    for (int k = 0; k < 64; ++k)
        CHECK(sine.components[0][static_cast<std::size_t>(k)] ==
              doctest::Approx(std::sin(two_pi * k / 64.0)).epsilon(1e-15));

    const VectorField c = sample(g, [](std::span<const double>, std::span<double> out) {
        out[0] = 2.5;
    });
    for (double v : c.components[0]) CHECK(v == 2.5);

    CHECK_THROWS_AS(sample(g, [](std::span<const double>, std::span<double> out) {
                        out[0] = std::nan("");
                    }),
                    evaluation_error);
}

TEST_CASE("sup_norm equals direct maximization over nodes") {
    const Grid g = make_grid(1, 64);
    CHECK(sup_norm(VectorField(g)) == 0.0);

    const VectorField c = sample(g, [](std::span<const double>, std::span<double> out) {
        out[0] = -3.0;
    });
    CHECK(sup_norm(c) == 3.0);

    // independent oracle: brute-force loop over the 64 nodes
    double expected = 0.0;
    for (int k = 0; k < 64; ++k)
        expected = std::max(expected, std::abs(std::sin(two_pi * k / 64.0)));
    const VectorField sine = sine_field_1d(64);
    CHECK(sup_norm(sine) == doctest::Approx(expected).epsilon(1e-15));
    // the quarter-period node makes the discrete max exactly 1 here
    CHECK(sup_norm(sine) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("spectral_derivative is exact on resolved trig polynomials") {
    const VectorField sine = sine_field_1d(64);
    const Grid& g = sine.grid;

    const VectorField d1 = spectral_derivative(sine, 0, 1);
    for (int k = 0; k < 64; ++k)
        CHECK(d1.components[0][static_cast<std::size_t>(k)] ==
              doctest::Approx(two_pi * std::cos(two_pi * k / 64.0)).epsilon(1e-10));

    const VectorField d2 = spectral_derivative(sine, 0, 2);
    for (int k = 0; k < 64; ++k)
        CHECK(d2.components[0][static_cast<std::size_t>(k)] ==
              doctest::Approx(-two_pi * two_pi * std::sin(two_pi * k / 64.0)).epsilon(1e-10));

    const VectorField c = sample(g, [](std::span<const double>, std::span<double> out) {
        out[0] = 4.0;
    });
    CHECK(sup_norm(spectral_derivative(c, 0, 1)) < 1e-12);
    CHECK(sup_norm(spectral_derivative(c, 0, 2)) < 1e-12);
}

TEST_CASE("spectral_derivative is linear and composes to second order") {
    const Grid g = make_grid(1, 64);
    const VectorField f = random_band_limited(g, 11);
    const VectorField h = random_band_limited(g, 23);

    VectorField combo = zero_like(f);
    add_scaled(combo, f, 0.7);
    add_scaled(combo, h, -1.3);
    const VectorField d_combo = spectral_derivative(combo, 0, 1);

    VectorField expected = zero_like(f);
    add_scaled(expected, spectral_derivative(f, 0, 1), 0.7);
    add_scaled(expected, spectral_derivative(h, 0, 1), -1.3);

    VectorField diff = d_combo;
    add_scaled(diff, expected, -1.0);
    CHECK(sup_norm(diff) <= 1e-12 * std::max(1.0, sup_norm(expected)));

    const VectorField twice = spectral_derivative(spectral_derivative(f, 0, 1), 0, 1);
    const VectorField second = spectral_derivative(f, 0, 2);
    VectorField d2 = twice;
    add_scaled(d2, second, -1.0);
    CHECK(sup_norm(d2) <= 1e-10 * std::max(1.0, sup_norm(second)));
}

TEST_CASE("c01 and c12 norms match their nodewise definitions") {
    const Grid g = make_grid(1, 64);
    CHECK(c01_norm(VectorField(g)) == 0.0);

    const VectorField c = sample(g, [](std::span<const double>, std::span<double> out) {
        out[0] = -2.0;
    });
    CHECK(c01_norm(c) == doctest::Approx(2.0).epsilon(1e-14));

    // oracle: max|sin| + 2pi max|cos| over the nodes
    double max_sin = 0.0;
    double max_cos = 0.0;
    for (int k = 0; k < 64; ++k) {
        max_sin = std::max(max_sin, std::abs(std::sin(two_pi * k / 64.0)));
        max_cos = std::max(max_cos, std::abs(std::cos(two_pi * k / 64.0)));
    }
    const VectorField sine = sine_field_1d(64);
    CHECK(c01_norm(sine) == doctest::Approx(max_sin + two_pi * max_cos).epsilon(1e-10));

    const VectorField zero_td = zero_like(sine);
    CHECK(c12_norm(VectorField(g), zero_like(VectorField(g))) == 0.0);
    CHECK(c12_norm(c, zero_like(c)) == doctest::Approx(2.0).epsilon(1e-14));

    const double nu = 0.1;
    VectorField td = sine;
    for (auto& v : td.components[0]) v *= -two_pi * two_pi * nu;
    const double expected = max_sin + two_pi * max_cos + two_pi * two_pi * nu * max_sin +
                            two_pi * two_pi * max_sin;
    CHECK(c12_norm(sine, td) == doctest::Approx(expected).epsilon(1e-10));

    const Grid g2 = make_grid(1, 32);
    CHECK_THROWS_AS(c12_norm(sine, VectorField(g2)), shape_error);
}

TEST_CASE("norm chain sup <= c01 <= c12 and shift invariance") {
    for (unsigned seed : {3u, 17u, 89u}) {
        const Grid g = make_grid(2, 32);
        const VectorField f = random_band_limited(g, seed);
        const VectorField td = random_band_limited(g, seed + 1);

        const NormReport r = norm_report(f, td);
        CHECK(r.sup <= r.c01 + 1e-14);
        CHECK(r.c01 <= r.c12 + 1e-14);
        CHECK(r.per_component_sup.size() == 2);

        for (int shift : {1, 7, 16}) {
            const VectorField fs = rolled(f, shift);
            CHECK(sup_norm(fs) == sup_norm(f));  // same multiset of values
            CHECK(c01_norm(fs) == doctest::Approx(c01_norm(f)).epsilon(1e-12));
            const VectorField tds = rolled(td, shift);
            CHECK(c12_norm(fs, tds) == doctest::Approx(c12_norm(f, td)).epsilon(1e-12));
        }
    }
}

TEST_CASE("curl2d vanishes on gradients and matches analytic shear") {
    const Grid g = make_grid(2, 32);

    // u = grad(phi), phi = cos(2pi x1) cos(2pi x2)
    const VectorField grad = sample(g, [](std::span<const double> x, std::span<double> out) {
        out[0] = -two_pi * std::sin(two_pi * x[0]) * std::cos(two_pi * x[1]);
        out[1] = -two_pi * std::cos(two_pi * x[0]) * std::sin(two_pi * x[1]);
    });
    CHECK(sup_norm(curl2d(grad)) <= 1e-10);

    // u = (sin(2pi x2), 0): curl = -2pi cos(2pi x2)
    const VectorField shear = sample(g, [](std::span<const double> x, std::span<double> out) {
        out[0] = std::sin(two_pi * x[1]);
        out[1] = 0.0;
    });
    const VectorField curl = curl2d(shear);
    std::array<int, 3> idx{};
    for (std::size_t i = 0; i < curl.components[0].size(); ++i) {
        decode_index(g, i, std::span<int>(idx.data(), 2));
        const double x2 = idx[1] * g.spacing;
        CHECK(curl.components[0][i] ==
              doctest::Approx(-two_pi * std::cos(two_pi * x2)).epsilon(1e-10));
    }

    CHECK(sup_norm(curl2d(VectorField(g))) == 0.0);
    CHECK_THROWS_AS(curl2d(VectorField(make_grid(1, 64))), domain_error);
}
