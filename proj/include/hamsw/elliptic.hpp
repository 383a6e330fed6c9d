#pragma once

#include <span>

#include "hamsw/grid.hpp"

namespace hamsw {

enum class OperatorKind { NewSystem, GreenNaghdi };

/**
 * Symmetric cyclic-tridiagonal momentum operator.
 *
 * NewSystem:   (T u)_i = u_i - [a_{i+1/2}(u_{i+1}-u_i) - a_{i-1/2}(u_i-u_{i-1})]/dx^2,
 *              a_{i+1/2} = H_{i+1/2}^2
 * GreenNaghdi: (T u)_i = H_i u_i - [...same flux form...]/dx^2,
 *              a_{i+1/2} = H_{i+1/2}^3 / 3
 * with H_{i+1/2} = (H_i + H_{i+1})/2. off[i] couples nodes i and i+1 (mod n),
 * so symmetry holds by storage layout.
 */
struct BandedOperator {
    OperatorKind kind;
    Field diag;
    Field off;
    double dx;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Throws std::invalid_argument if any H_i <= 0 ("depth must stay positive").
BandedOperator assemble(std::span<const double> H, const Grid& g, OperatorKind kind);

Field apply_operator(const BandedOperator& op, std::span<const double> u);

/// Direct O(n) solve of op * u = m. Throws NumericalError if a pivot is not positive.
Field solve(const BandedOperator& op, std::span<const double> m);

/// Discrete quadratic form integrate(u * apply_operator(op, u)) evaluated in flux form:
/// dx * sum_i [w_i u_i^2 + a_{i+1/2} ((u_{i+1}-u_i)/dx)^2].
double quadratic_form(std::span<const double> H, std::span<const double> u, const Grid& g,
                      OperatorKind kind);

/**
 * Partial derivative of 1/2 quadratic_form(H, u) with respect to H_i at fixed u, divided by dx.
 *
 * NewSystem:   (1/2)[H_{i+1/2} w_i^2 + H_{i-1/2} w_{i-1}^2]          ~ H u_x^2
 * GreenNaghdi: u_i^2/2 + (1/4)[H_{i+1/2}^2 w_i^2 + H_{i-1/2}^2 w_{i-1}^2] ~ u^2/2 + H^2 u_x^2/2
 * where w = diff_forward(u). This is the exact gradient of the discrete kinetic energy.
 */
Field kinetic_depth_sensitivity(std::span<const double> H, std::span<const double> u, const Grid& g,
                                OperatorKind kind);

}  // namespace hamsw
