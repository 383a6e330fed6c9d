#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include "hamsw/grid.hpp"

namespace hamsw::testing {

inline double max_abs(std::span<const double> f) {
    double m = 0.0;
    for (double v : f) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

inline double l2_norm(std::span<const double> f, const Grid& g) { return std::sqrt(inner(f, f, g)); }

template <class F>
Field sample(const Grid& g, F&& f) {
    Field out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = f(g.x(i));
    }
    return out;
}

/// Random smooth periodic field: a few low Fourier modes with random amplitudes/phases.
inline Field smooth_random(const Grid& g, std::mt19937& rng, double scale = 1.0, int modes = 4) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    Field out(g.size(), 0.0);
    for (int k = 1; k <= modes; ++k) {
        const double a = scale * amp(rng) / k;
        const double p = phase(rng);
        const double w = 2.0 * std::numbers::pi * k / g.length();
        for (std::size_t i = 0; i < g.size(); ++i) {
            out[i] += a * std::sin(w * (g.x(i) - g.x0()) + p);
        }
    }
    return out;
}

/// Random (rough) field with i.i.d. entries.
inline Field white_noise(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Field out(n);
    for (double& v : out) {
        v = d(rng);
    }
    return out;
}

/// Positive depth 1 + smooth perturbation bounded by +-0.5.
inline Field positive_depth(const Grid& g, std::mt19937& rng) {
    Field h = smooth_random(g, rng, 0.25, 3);
    for (double& v : h) {
        v += 1.0;
    }
    return h;
}

}  // namespace hamsw::testing
