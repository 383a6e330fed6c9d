#include "hamsw/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hamsw {

namespace {

void require_size(std::span<const double> f, const Grid& g, const char* what) {
    if (f.size() != g.size()) {
        throw std::invalid_argument(std::string(what) + ": field has " + std::to_string(f.size()) +
                                    " entries, grid has " + std::to_string(g.size()));
    }
}

}  // namespace

Grid::Grid(std::size_t n, double length, double x0)
    : length_(length), x0_(x0), dx_(length / static_cast<double>(n)), x_(n) {
    for (std::size_t i = 0; i < n; ++i) {
        x_[i] = x0 + static_cast<double>(i) * dx_;
    }
}

Grid Grid::build(std::size_t n, double length, double x0) {
    if (n < 8) {
        throw std::invalid_argument("n too small: need at least 8 cells, got " + std::to_string(n));
    }
    if (n % 2 != 0) {
        throw std::invalid_argument("n must be even, got " + std::to_string(n));
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw std::invalid_argument("length must be positive");
    }
    if (!std::isfinite(x0)) {
        throw std::invalid_argument("x0 must be finite");
    }
    return Grid(n, length, x0);
}

double Grid::periodic_offset(double x, double center) const noexcept {
    double d = std::fmod(x - center, length_);
    if (d < -0.5 * length_) {
        d += length_;
    } else if (d >= 0.5 * length_) {
        d -= length_;
    }
    return d;
}

Field diff1(std::span<const double> f, const Grid& g) {
    require_size(f, g, "diff1");
    const std::size_t n = g.size();
    const double s = 0.5 / g.dx();
    Field out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (f[g.next(i)] - f[g.prev(i)]) * s;
    }
    return out;
}

Field diff2(std::span<const double> f, const Grid& g) {
    require_size(f, g, "diff2");
    const std::size_t n = g.size();
    const double s = 1.0 / (g.dx() * g.dx());
    Field out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (f[g.next(i)] - 2.0 * f[i] + f[g.prev(i)]) * s;
    }
    return out;
}

Field diff_forward(std::span<const double> f, const Grid& g) {
    require_size(f, g, "diff_forward");
    const std::size_t n = g.size();
    const double s = 1.0 / g.dx();
    Field out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (f[g.next(i)] - f[i]) * s;
    }
    return out;
}

double integrate(std::span<const double> f, const Grid& g) {
    require_size(f, g, "integrate");
    double sum = 0.0;
    for (double v : f) {
        sum += v;
    }
    return g.dx() * sum;
}

double inner(std::span<const double> f, std::span<const double> h, const Grid& g) {
    require_size(f, g, "inner");
    require_size(h, g, "inner");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sum += f[i] * h[i];
    }
    return g.dx() * sum;
}

}  // namespace hamsw
