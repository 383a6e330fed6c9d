#include "hamsw/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamsw {

namespace {

double potential(std::span<const double> H, const Grid& g) {
    double sum = 0.0;
    for (double h : H) {
        sum += (h - 1.0) * (h - 1.0);
    }
    return 0.5 * g.dx() * sum;
}

}  // namespace

double energy(const State& s, const Grid& g, ModelKind kind) {
    check_state(s.u, s.H, g);
    double kinetic = 0.0;
    if (kind == ModelKind::ClassicalShallowWater) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            kinetic += s.H[i] * s.u[i] * s.u[i];
        }
        kinetic *= 0.5 * g.dx();
    } else {
        kinetic = 0.5 * quadratic_form(s.H, s.u, g, operator_kind(kind));
    }
    return kinetic + potential(s.H, g);
}

double energy(const MomentumState& ms, const Grid& g, ModelKind kind) {
    return energy(u_from_m(ms, g, kind), g, kind);
}

double mass(const State& s, const Grid& g) {
    if (s.H.size() != g.size()) {
        throw std::invalid_argument("mass: depth size does not match grid");
    }
    double sum = 0.0;
    for (double h : s.H) {
        sum += h - 1.0;
    }
    return g.dx() * sum;
}

Field delta_H_delta_H(const State& s, const Grid& g, ModelKind kind) {
    Field out = kinetic_depth_sensitivity(s.H, s.u, g, operator_kind(kind));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = -out[i] + (s.H[i] - 1.0);
    }
    return out;
}

Field momentum_flux(const State& s, const Grid& g) {
    const Field m = m_from_u(s, g, ModelKind::NewSystem).m;
    const Field u_x = diff1(s.u, g);
    Field flux(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double u = s.u[i];
        const double h = s.H[i];
        flux[i] = m[i] * u + 0.5 * u * u + 0.5 * h * h - 1.5 * h * h * u_x[i] * u_x[i];
    }
    return flux;
}

double total_momentum(std::span<const double> m, const Grid& g) { return integrate(m, g); }

Diagnostics diagnose(double t, const State& s, std::span<const double> m, const Grid& g,
                     ModelKind kind) {
    Diagnostics d;
    d.t = t;
    d.mass = mass(s, g);
    d.energy = energy(s, g, kind);
    d.total_momentum = total_momentum(m, g);
    d.max_H = *std::max_element(s.H.begin(), s.H.end());
    d.max_u = 0.0;
    for (double u : s.u) {
        d.max_u = std::max(d.max_u, std::abs(u));
    }
    return d;
}

}  // namespace hamsw
