#pragma once

#include <functional>

#include "hamsw/grid.hpp"

namespace hamsw {

struct SolitonParams {
    double c = 2.0;
    bool recenter = true;
};

struct ProfilePoint {
    double H;
    double u;
};

/// Throws ConfigError("c must exceed 1") unless c > 1.
void validate_speed(double c);

/// Decay rate sqrt(c^2 - 1)/c shared by the exponential tails.
double decay_rate(double c);

/// Crest position of the new-system profile in the unshifted coordinate: -c ln(c)/sqrt(c^2-1).
double crest_offset_new(double c);

/**
 * Closed-form solitary wave of the new system,
 *   H = 1 + (c^2-1) / [1 + (c^2+1)/2 cosh(th) + (c^2-1)/2 sinh(th)],  th = decay_rate(c) * xi,
 *   u = c (1 - 1/H).
 * With recenter set the crest is moved to xi = 0.
 */
ProfilePoint soliton_new(const SolitonParams& p, double xi);

/// Green-Naghdi solitary wave H = 1 + (c^2-1) sech^2(sqrt(3)/2 * decay_rate(c) * xi).
ProfilePoint soliton_gn(const SolitonParams& p, double xi);

enum class RootBranch {
    /// Positive root on the leading side of the crest, conjugate root behind it.
    FollowCrest,
    /// Always the positive square root.
    Principal,
};

/**
 * Residual of the implicit traveling-wave relation
 *   [sqrt(c^2-1) sqrt(c^2-H^2) + c^2 - H] / (H - 1) - exp(-decay_rate(c) * xi)
 * for the unshifted profile. Requires 1 < H < c.
 */
double check_implicit(double H, double xi, double c, RootBranch branch = RootBranch::FollowCrest);

/// Golden-section search for the maximum of a unimodal f on [lo, hi]; returns the argmax.
double maximize_unimodal(const std::function<double(double)>& f, double lo, double hi);

/// Pointwise c^2 (diff1 H)^2 - (H-1)^2 (c^2 - H^2).
Field check_traveling_ode(std::span<const double> H, const Grid& g, double c);

}  // namespace hamsw
