#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hamsw/conservation.hpp"
#include "hamsw/timestepper.hpp"
#include "test_support.hpp"

namespace hamsw {
namespace {

using testing::max_abs;
using testing::sample;

// 30-digit quadrature of the continuous energy and mass of the solitary waves.
constexpr double kEnergyNewC2 = 3.60745994512302449;
constexpr double kEnergyGnC2 = 19.8344640591848584;
constexpr double kMassNewC2 = 4.18879020478639098;  // 4 pi / 3
constexpr double kMassGnC2 = 8.0;

State rest(const Grid& g) { return {Field(g.size(), 0.0), Field(g.size(), 1.0)}; }

TEST(Conservation, RestHasZeroInvariants) {
    const Grid g = Grid::build(64, 10.0, 0.0);
    for (ModelKind kind : {ModelKind::NewSystem, ModelKind::GreenNaghdi, ModelKind::ClassicalShallowWater}) {
        EXPECT_EQ(energy(rest(g), g, kind), 0.0);
    }
    EXPECT_EQ(mass(rest(g), g), 0.0);
    EXPECT_EQ(total_momentum(Field(g.size(), 0.0), g), 0.0);
}

TEST(Conservation, PotentialEnergyOnly) {
    const Grid g = Grid::build(200, 2.0 * std::numbers::pi, 0.0);
    const State s{Field(g.size(), 0.0), sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x); })};
    // 1/2 int 0.01 sin^2 = 0.01 pi / 2, exact for the trapezoid rule
    for (ModelKind kind : {ModelKind::NewSystem, ModelKind::GreenNaghdi, ModelKind::ClassicalShallowWater}) {
        EXPECT_NEAR(energy(s, g, kind), 0.005 * std::numbers::pi, 1e-15);
    }
    EXPECT_NEAR(mass(s, g), 0.0, 1e-15);
}

TEST(Conservation, MomentumStateEnergyMatchesPrimitive) {
    std::mt19937 rng(61);
    const Grid g = Grid::build(128, 12.0, 0.0);
    const State s{testing::smooth_random(g, rng), testing::positive_depth(g, rng)};
    for (ModelKind kind : {ModelKind::NewSystem, ModelKind::GreenNaghdi}) {
        const double e = energy(s, g, kind);
        EXPECT_NEAR(energy(m_from_u(s, g, kind), g, kind), e, 1e-12 * e);
    }
}

struct Ladder {
    double order;
    double extrapolated;
};

Ladder soliton_energy_ladder(ModelKind kind) {
    double e[3];
    std::size_t n = 512;
    for (double& v : e) {
        const Grid g = Grid::build(n, 80.0, -40.0);
        v = energy(exact_soliton_state(kind, 2.0, 0.0, 0.0, g), g, kind);
        n *= 2;
    }
    return {std::log2((e[0] - e[1]) / (e[1] - e[2])), e[2] + (e[2] - e[1]) / 3.0};
}

TEST(Conservation, SolitonEnergyConvergesToContinuousValue) {
    const Ladder ln = soliton_energy_ladder(ModelKind::NewSystem);
    EXPECT_NEAR(ln.order, 2.0, 0.1);
    EXPECT_NEAR(ln.extrapolated, kEnergyNewC2, 1e-7);
    const Ladder lg = soliton_energy_ladder(ModelKind::GreenNaghdi);
    EXPECT_NEAR(lg.order, 2.0, 0.1);
    EXPECT_NEAR(lg.extrapolated, kEnergyGnC2, 1e-6);
}

TEST(Conservation, SolitonMass) {
    const Grid g = Grid::build(1024, 80.0, -40.0);
    EXPECT_NEAR(mass(exact_soliton_state(ModelKind::NewSystem, 2.0, 0.0, 0.0, g), g), kMassNewC2, 1e-8);
    EXPECT_NEAR(mass(exact_soliton_state(ModelKind::GreenNaghdi, 2.0, 0.0, 0.0, g), g), kMassGnC2, 1e-8);
}

TEST(Conservation, DeltaHAtRestAndWithoutVelocity) {
    std::mt19937 rng(67);
    const Grid g = Grid::build(64, 8.0, 0.0);
    for (ModelKind kind : {ModelKind::NewSystem, ModelKind::GreenNaghdi}) {
        EXPECT_EQ(max_abs(delta_H_delta_H(rest(g), g, kind)), 0.0);
        const State s{Field(g.size(), 0.0), testing::positive_depth(g, rng)};
        const Field d = delta_H_delta_H(s, g, kind);
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_DOUBLE_EQ(d[i], s.H[i] - 1.0);
        }
    }
}

class Gradient : public ::testing::TestWithParam<ModelKind> {};

// Central differences at three step sizes; the best one must agree with the analytic gradient.
template <class F>
double best_fd_error(F&& energy_at, double analytic) {
    double best = INFINITY;
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        const double fd = (energy_at(eps) - energy_at(-eps)) / (2.0 * eps);
        best = std::min(best, std::abs(fd - analytic));
    }
    return best;
}

TEST_P(Gradient, DepthDerivativeAtFixedMomentum) {
    const ModelKind kind = GetParam();
    std::mt19937 rng(71);
    const Grid g = Grid::build(64, 10.0, 0.0);
    const State s{testing::smooth_random(g, rng), testing::positive_depth(g, rng)};
    const MomentumState ms = m_from_u(s, g, kind);
    const Field d = delta_H_delta_H(s, g, kind);
    for (std::size_t j : {0u, 7u, 31u, 63u}) {
        auto e = [&](double eps) {
            MomentumState p = ms;
            p.H[j] += eps;
            return energy(p, g, kind);
        };
        EXPECT_LE(best_fd_error(e, g.dx() * d[j]) / g.dx(), 1e-6) << j;
    }
}

TEST_P(Gradient, VelocityDerivativeIsMomentum) {
    const ModelKind kind = GetParam();
    std::mt19937 rng(73);
    const Grid g = Grid::build(64, 10.0, 0.0);
    const State s{testing::smooth_random(g, rng), testing::positive_depth(g, rng)};
    const Field m = m_from_u(s, g, kind).m;
    for (std::size_t j : {0u, 13u, 40u, 63u}) {
        auto e = [&](double eps) {
            State p = s;
            p.u[j] += eps;
            return energy(p, g, kind);
        };
        EXPECT_LE(best_fd_error(e, g.dx() * m[j]) / g.dx(), 1e-6) << j;
    }
}

TEST_P(Gradient, MomentumDerivativeIsVelocity) {
    const ModelKind kind = GetParam();
    std::mt19937 rng(79);
    const Grid g = Grid::build(64, 10.0, 0.0);
    const State s{testing::smooth_random(g, rng), testing::positive_depth(g, rng)};
    const MomentumState ms = m_from_u(s, g, kind);
    for (std::size_t j : {0u, 21u, 50u}) {
        auto e = [&](double eps) {
            MomentumState p = ms;
            p.m[j] += eps;
            return energy(p, g, kind);
        };
        EXPECT_LE(best_fd_error(e, g.dx() * s.u[j]) / g.dx(), 1e-6) << j;
    }
}

TEST_P(Gradient, EnergyIsShiftInvariant) {
    const ModelKind kind = GetParam();
    std::mt19937 rng(83);
    const Grid g = Grid::build(96, 10.0, 0.0);
    const State s{testing::white_noise(g.size(), rng), testing::positive_depth(g, rng)};
    const double e = energy(s, g, kind);
    for (std::size_t k : {1u, 17u, 95u}) {
        State r = s;
        std::rotate(r.u.begin(), r.u.begin() + k, r.u.end());
        std::rotate(r.H.begin(), r.H.begin() + k, r.H.end());
        EXPECT_NEAR(energy(r, g, kind), e, 1e-13 * e);
    }
}

INSTANTIATE_TEST_SUITE_P(Models, Gradient,
                         ::testing::Values(ModelKind::NewSystem, ModelKind::GreenNaghdi),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Conservation, MomentumFluxSimpleStates) {
    const Grid g = Grid::build(32, 4.0, 0.0);
    const Field rest_flux = momentum_flux(rest(g), g);
    for (double f : rest_flux) {
        EXPECT_DOUBLE_EQ(f, 0.5);
    }
    std::mt19937 rng(89);
    const State still{Field(g.size(), 0.0), testing::positive_depth(g, rng)};
    const Field flux = momentum_flux(still, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_DOUBLE_EQ(flux[i], 0.5 * still.H[i] * still.H[i]);
    }
}

// For a wave travelling at speed c, flux - c m is constant (= 1/2, its far-field value).
double flux_residual(std::size_t n) {
    const double c = 2.0;
    const Grid g = Grid::build(n, 80.0, -40.0);
    const State s = exact_soliton_state(ModelKind::NewSystem, c, 0.0, 0.0, g);
    const Field m = m_from_u(s, g, ModelKind::NewSystem).m;
    const Field flux = momentum_flux(s, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(flux[i] - c * m[i] - 0.5));
    }
    return worst;
}

TEST(Conservation, MomentumFluxOnSoliton) {
    const double coarse = flux_residual(1024);
    const double fine = flux_residual(2048);
    EXPECT_LT(fine, 1e-3);
    EXPECT_NEAR(coarse / fine, 4.0, 0.5);
}

TEST(Conservation, DiagnoseCollectsEverything) {
    const Grid g = Grid::build(512, 80.0, -40.0);
    const State s = exact_soliton_state(ModelKind::NewSystem, 2.0, 0.0, 0.0, g);
    const Field m = m_from_u(s, g, ModelKind::NewSystem).m;
    const Diagnostics d = diagnose(1.5, s, m, g, ModelKind::NewSystem);
    EXPECT_EQ(d.t, 1.5);
    EXPECT_EQ(d.mass, mass(s, g));
    EXPECT_EQ(d.energy, energy(s, g, ModelKind::NewSystem));
    EXPECT_EQ(d.total_momentum, total_momentum(m, g));
    EXPECT_NEAR(d.max_H, 2.0, 1e-3);
    EXPECT_NEAR(d.max_u, 1.0, 1e-3);
}

}  // namespace
}  // namespace hamsw
