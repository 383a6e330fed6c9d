#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hamsw/grid.hpp"
#include "hamsw/solitons.hpp"
#include "test_support.hpp"

namespace hamsw {
namespace {

using testing::max_abs;
using testing::sample;

constexpr double kPi = std::numbers::pi;

TEST(Grid, BuildSpacingAndNodes) {
    const Grid g = Grid::build(8, 8.0, -4.0);
    EXPECT_EQ(g.dx(), 1.0);
    ASSERT_EQ(g.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(g.x(i), -4.0 + static_cast<double>(i));
    }
    EXPECT_EQ(Grid::build(16, 32.0, -16.0).dx(), 2.0);
}

TEST(Grid, RejectsBadParameters) {
    try {
        Grid::build(6, 8.0, 0.0);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("n too small"), std::string::npos);
    }
    EXPECT_THROW(Grid::build(9, 8.0, 0.0), std::invalid_argument);
    EXPECT_THROW(Grid::build(8, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(Grid::build(8, -1.0, 0.0), std::invalid_argument);
}

TEST(Grid, PeriodicOffsetUsesNearestImage) {
    const Grid g = Grid::build(16, 10.0, -5.0);
    EXPECT_DOUBLE_EQ(g.periodic_offset(4.0, -4.0), -2.0);
    EXPECT_DOUBLE_EQ(g.periodic_offset(-4.0, 4.0), 2.0);
    EXPECT_DOUBLE_EQ(g.periodic_offset(1.0, 0.5), 0.5);
}

TEST(Grid, DifferencesAnnihilateConstants) {
    const Grid g = Grid::build(64, 7.3, 1.1);
    const Field f(g.size(), 5.0);
    EXPECT_LE(max_abs(diff1(f, g)), 1e-13);
    EXPECT_LE(max_abs(diff2(f, g)), 1e-13);
}

TEST(Grid, Diff1SpikeResponse) {
    const Grid g = Grid::build(8, 4.0, 0.0);
    for (std::size_t j : {0u, 3u, 7u}) {
        Field e(g.size(), 0.0);
        e[j] = 1.0;
        const Field d = diff1(e, g);
        EXPECT_DOUBLE_EQ(d[g.prev(j)], 1.0 / (2.0 * g.dx()));
        EXPECT_DOUBLE_EQ(d[g.next(j)], -1.0 / (2.0 * g.dx()));
        EXPECT_EQ(d[j], 0.0);
    }
}

double diff1_sine_error(std::size_t n) {
    const double L = 10.0;
    const Grid g = Grid::build(n, L, 0.0);
    const double k = 2.0 * kPi / L;
    const Field f = sample(g, [&](double x) { return std::sin(k * x); });
    const Field d = diff1(f, g);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        err = std::max(err, std::abs(d[i] - k * std::cos(k * g.x(i))));
    }
    return err;
}

double diff2_smooth_error(std::size_t n) {
    // exp(sin x) has all Fourier modes, unlike a pure sine
    const double L = 2.0 * kPi;
    const Grid g = Grid::build(n, L, 0.0);
    const Field f = sample(g, [](double x) { return std::exp(std::sin(x)); });
    const Field d = diff2(f, g);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = g.x(i);
        const double exact = std::exp(std::sin(x)) * (std::cos(x) * std::cos(x) - std::sin(x));
        err = std::max(err, std::abs(d[i] - exact));
    }
    return err;
}

TEST(Grid, SecondOrderConvergence) {
    for (std::size_t n : {32u, 64u, 128u}) {
        const double r1 = diff1_sine_error(n) / diff1_sine_error(2 * n);
        EXPECT_GE(r1, 3.5) << n;
        EXPECT_LE(r1, 4.5) << n;
        const double r2 = diff2_smooth_error(n) / diff2_smooth_error(2 * n);
        EXPECT_GE(r2, 3.5) << n;
        EXPECT_LE(r2, 4.5) << n;
    }
}

TEST(Grid, Diff2DiscreteEigenvalue) {
    const double L = 12.0;
    const Grid g = Grid::build(48, L, -6.0);
    for (int mode : {1, 3, 7}) {
        const double k = 2.0 * kPi * mode / L;
        const Field f = sample(g, [&](double x) { return std::sin(k * x); });
        const Field d = diff2(f, g);
        const double lambda = -2.0 * (1.0 - std::cos(k * g.dx())) / (g.dx() * g.dx());
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_NEAR(d[i], lambda * f[i], 1e-12 * std::abs(lambda));
        }
    }
}

TEST(Grid, Diff2IsLinear) {
    std::mt19937 rng(11);
    const Grid g = Grid::build(32, 5.0, 0.0);
    const Field f = testing::white_noise(g.size(), rng);
    const Field h = testing::white_noise(g.size(), rng);
    const double a = 1.7;
    const double b = -0.3;
    Field combo(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        combo[i] = a * f[i] + b * h[i];
    }
    const Field lhs = diff2(combo, g);
    const Field df = diff2(f, g);
    const Field dh = diff2(h, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(lhs[i], a * df[i] + b * dh[i], 1e-11);
    }
}

TEST(Grid, IntegrateBasics) {
    const Grid g = Grid::build(20, 10.0, -3.0);
    EXPECT_NEAR(integrate(Field(g.size(), 1.0), g), 10.0, 1e-14);
    const Field s = sample(g, [&](double x) { return std::sin(2.0 * kPi * x / g.length()); });
    EXPECT_LE(std::abs(integrate(s, g)), 1e-14);
}

TEST(Grid, IntegrateSolitonExcessMatchesQuadrature) {
    // 2 c atan(sqrt(c^2 - 1)) = 4 pi / 3 for c = 2; cross-checked with 30-digit adaptive quadrature.
    const double oracle = 4.18879020478639098;
    const Grid g = Grid::build(1024, 80.0, -40.0);
    const SolitonParams p{2.0, true};
    const Field excess = sample(g, [&](double x) { return soliton_new(p, x).H - 1.0; });
    const double value = integrate(excess, g);
    EXPECT_GT(value, 0.0);
    EXPECT_NEAR(value, oracle, 1e-8);
}

TEST(Grid, SummationByParts) {
    std::mt19937 rng(3);
    const Grid g = Grid::build(64, 9.0, 0.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Field f = testing::white_noise(g.size(), rng);
        const Field h = testing::white_noise(g.size(), rng);
        const double lhs = inner(f, diff1(h, g), g);
        const double rhs = -inner(h, diff1(f, g), g);
        EXPECT_NEAR(lhs, rhs, 1e-12);
    }
}

TEST(Grid, LengthMismatchThrows) {
    const Grid g = Grid::build(8, 1.0, 0.0);
    const Field f(7, 0.0);
    EXPECT_THROW(diff1(f, g), std::invalid_argument);
    EXPECT_THROW(diff2(f, g), std::invalid_argument);
    EXPECT_THROW(integrate(f, g), std::invalid_argument);
}

}  // namespace
}  // namespace hamsw
