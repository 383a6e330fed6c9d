#include "hamsw/solitons.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hamsw/errors.hpp"

namespace hamsw {

void validate_speed(double c) {
    if (!(c > 1.0) || !std::isfinite(c)) {
        throw ConfigError("c must exceed 1 (got " + std::to_string(c) + ")");
    }
}

double decay_rate(double c) {
    validate_speed(c);
    return std::sqrt(c * c - 1.0) / c;
}

double crest_offset_new(double c) {
    validate_speed(c);
    return -c * std::log(c) / std::sqrt(c * c - 1.0);
}

ProfilePoint soliton_new(const SolitonParams& p, double xi) {
    const double c = p.c;
    const double k = decay_rate(c);
    const double shifted = p.recenter ? xi + crest_offset_new(c) : xi;
    const double theta = k * shifted;
    const double c2 = c * c;

    // 1 + (c^2+1)/2 cosh + (c^2-1)/2 sinh == 1 + c^2/2 e^th + 1/2 e^-th, written so that
    // neither exponential overflows in the tails.
    double excess;
    if (theta >= 0.0) {
        const double e = std::exp(-theta);
        excess = 2.0 * (c2 - 1.0) * e / (c2 + 2.0 * e + e * e);
    } else {
        const double e = std::exp(theta);
        excess = 2.0 * (c2 - 1.0) * e / (c2 * e * e + 2.0 * e + 1.0);
    }
    const double H = 1.0 + excess;
    return {H, c * excess / H};
}

ProfilePoint soliton_gn(const SolitonParams& p, double xi) {
    const double c = p.c;
    const double arg = 0.5 * std::sqrt(3.0) * decay_rate(c) * xi;
    const double sech = 1.0 / std::cosh(arg);
    const double excess = (c * c - 1.0) * sech * sech;
    const double H = 1.0 + excess;
    return {H, c * excess / H};
}

double check_implicit(double H, double xi, double c, RootBranch branch) {
    validate_speed(c);
    if (!(H > 1.0)) {
        throw std::invalid_argument("implicit relation requires H > 1");
    }
    if (!(H < c)) {
        throw std::invalid_argument("implicit relation requires H < c");
    }
    const double c2 = c * c;
    const double principal = (std::sqrt(c2 - 1.0) * std::sqrt(c2 - H * H) + c2 - H) / (H - 1.0);
    double lhs = principal;
    if (branch == RootBranch::FollowCrest && xi > crest_offset_new(c)) {
        // Conjugate root; the two branches multiply to c^2.
        lhs = c2 / principal;
    }
    return lhs - std::exp(-decay_rate(c) * xi);
}

Field check_traveling_ode(std::span<const double> H, const Grid& g, double c) {
    const Field dH = diff1(H, g);
    const double c2 = c * c;
    Field out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double e = H[i] - 1.0;
        out[i] = c2 * dH[i] * dH[i] - e * e * (c2 - H[i] * H[i]);
    }
    return out;
}

double maximize_unimodal(const std::function<double(double)>& f, double lo, double hi) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace hamsw
