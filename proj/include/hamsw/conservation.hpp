#pragma once

#include "hamsw/grid.hpp"
#include "hamsw/models.hpp"

namespace hamsw {

/// Conserved-quantity record at one time level.
struct Diagnostics {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double total_momentum = 0.0;
    double max_H = 0.0;
    double max_u = 0.0;
};

/**
 * Discrete Hamiltonian.
 *
 * NewSystem:   1/2 int [u^2 + H^2 u_x^2 + (H-1)^2]
 * GreenNaghdi: 1/2 int [H u^2 + H^3 u_x^2 / 3 + (H-1)^2]
 * ClassicalShallowWater: 1/2 int [H u^2 + (H-1)^2]
 * The dispersive terms use the same flux-form stencil as the momentum operator, so that
 * the gradient in u is exactly m_from_u and the gradient in H is delta_H_delta_H.
 */
double energy(const State& s, const Grid& g, ModelKind kind);

/// Energy as a function of (m, H): recovers u = T_H^{-1} m first.
double energy(const MomentumState& ms, const Grid& g, ModelKind kind);

/// integrate(H - 1)
double mass(const State& s, const Grid& g);

/// Variational derivative of the energy in H at fixed m: -dK/dH + (H - 1).
Field delta_H_delta_H(const State& s, const Grid& g, ModelKind kind);

/// Local momentum flux m u + u^2/2 + H^2/2 - 3 H^2 u_x^2 / 2 (NewSystem), u_x = diff1(u).
Field momentum_flux(const State& s, const Grid& g);

/// integrate(m) for dispersive models, integrate(H u) for classical shallow water.
double total_momentum(std::span<const double> m, const Grid& g);

Diagnostics diagnose(double t, const State& s, std::span<const double> m, const Grid& g,
                     ModelKind kind);

}  // namespace hamsw
