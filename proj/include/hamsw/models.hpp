#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hamsw/elliptic.hpp"
#include "hamsw/grid.hpp"

namespace hamsw {

enum class ModelKind { NewSystem, GreenNaghdi, ClassicalShallowWater };

std::string_view to_string(ModelKind kind);

/// Momentum operator family of a dispersive model; throws std::invalid_argument for
/// ClassicalShallowWater, which has no momentum operator.
OperatorKind operator_kind(ModelKind kind);

/// Primitive variables: velocity u and total depth H = 1 + eps*eta.
struct State {
    Field u;
    Field H;
};

/// Hamiltonian evolution variables: momentum density m = T_H u and depth H.
struct MomentumState {
    Field m;
    Field H;
};

/// Time derivatives of a two-field state; `first` is dm/dt (Hamiltonian) or du/dt (primitive).
struct Tendency {
    Field first;
    Field dH;
};

/**
 * How the momentum row of the Hamiltonian system is discretized.
 *
 * SkewAdjoint evaluates -[(m u)_x + m u_x] - H (dE/dH)_x with the exact discrete
 * variational derivative; the semi-discrete flow then conserves the discrete energy.
 * Flux evaluates -(m u + u^2/2 + H^2/2 - 3 H^2 u_x^2/2)_x (NewSystem only); the
 * semi-discrete flow then conserves total momentum to roundoff.
 */
enum class MomentumForm { SkewAdjoint, Flux };

MomentumState m_from_u(const State& s, const Grid& g, ModelKind kind);
State u_from_m(const MomentumState& ms, const Grid& g, ModelKind kind);

/// Throws std::invalid_argument on length mismatch or any H_i <= 0.
void check_state(std::span<const double> a, std::span<const double> H, const Grid& g);

Tendency rhs_hamiltonian(const MomentumState& ms, const Grid& g, ModelKind kind,
                         MomentumForm form = MomentumForm::SkewAdjoint);

/// Same as rhs_hamiltonian for a state whose velocity is already known (u = T_H^{-1} m).
Tendency rhs_hamiltonian(const MomentumState& ms, std::span<const double> u, const Grid& g,
                         ModelKind kind, MomentumForm form = MomentumForm::SkewAdjoint);

/// Classical shallow water u_t = -(u u_x + H_x) + nu u_xx, H_t = -(H u)_x.
Tendency rhs_primitive_swe(const State& s, const Grid& g, double viscosity = 0.0);

/// Leading-order vertical velocity v(x, z) = -z u_x and pressure p = H - 1.
struct VerticalStructure {
    std::vector<double> z_levels;
    std::vector<Field> v;  // v[k][i] at z_levels[k], node i
    Field p;
};

VerticalStructure reconstruct_fields(const State& s, const Grid& g,
                                     std::span<const double> z_levels);

/// Physical scales of a dimensional problem; all strictly positive.
struct ScalingParams {
    double h0 = 1.0;
    double lambda = 1.0;
    double amplitude = 1.0;
    double gravity = 1.0;

    double epsilon() const noexcept { return amplitude / h0; }
    double delta() const noexcept { return h0 / lambda; }
    double wave_speed() const;  // sqrt(g h0)

    void validate() const;
};

/// Point values of the flow; dimensional or nondimensional depending on context.
struct FlowSample {
    double x = 0.0;
    double z = 0.0;
    double t = 0.0;
    double eta = 0.0;
    double u = 0.0;
    double v = 0.0;
};

FlowSample nondimensionalize(const ScalingParams& sp, const FlowSample& dimensional);
FlowSample dimensionalize(const ScalingParams& sp, const FlowSample& nondimensional);

/// H = 1 + eps * eta (nondimensional eta).
double depth_from_elevation(const ScalingParams& sp, double eta);

}  // namespace hamsw
