#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hamsw {

using Field = std::vector<double>;

/**
 * Uniform periodic 1-D mesh.
 *
 * Node i sits at x0 + i*dx with dx = length/n; node n is identified with node 0.
 * All difference operators below wrap indices modulo n.
 */
class Grid {
public:
    /// Throws std::invalid_argument for odd n, n < 8, or non-positive length.
    static Grid build(std::size_t n, double length, double x0);

    std::size_t size() const noexcept { return x_.size(); }
    double length() const noexcept { return length_; }
    double x0() const noexcept { return x0_; }
    double dx() const noexcept { return dx_; }
    double x(std::size_t i) const { return x_[i]; }
    std::span<const double> nodes() const noexcept { return x_; }

    std::size_t next(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const noexcept { return i == 0 ? size() - 1 : i - 1; }

    /// Minimum-image offset of x from `center` on the periodic domain, in [-L/2, L/2).
    double periodic_offset(double x, double center) const noexcept;

private:
    Grid(std::size_t n, double length, double x0);

    double length_;
    double x0_;
    double dx_;
    std::vector<double> x_;
};

/// Centered difference (f[i+1] - f[i-1]) / (2 dx).
Field diff1(std::span<const double> f, const Grid& g);

/// Three-point second difference (f[i+1] - 2 f[i] + f[i-1]) / dx^2.
Field diff2(std::span<const double> f, const Grid& g);

/// Forward difference (f[i+1] - f[i]) / dx, located at the midpoint i+1/2.
Field diff_forward(std::span<const double> f, const Grid& g);

/// Periodic rectangle rule dx * sum f[i].
double integrate(std::span<const double> f, const Grid& g);

/// integrate(f * h) without forming the product.
double inner(std::span<const double> f, std::span<const double> h, const Grid& g);

}  // namespace hamsw
