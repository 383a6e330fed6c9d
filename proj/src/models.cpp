#include "hamsw/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hamsw/conservation.hpp"

namespace hamsw {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::NewSystem:
            return "new";
        case ModelKind::GreenNaghdi:
            return "gn";
        case ModelKind::ClassicalShallowWater:
            return "swe";
    }
    return "?";
}

OperatorKind operator_kind(ModelKind kind) {
    switch (kind) {
        case ModelKind::NewSystem:
            return OperatorKind::NewSystem;
        case ModelKind::GreenNaghdi:
            return OperatorKind::GreenNaghdi;
        case ModelKind::ClassicalShallowWater:
            break;
    }
    throw std::invalid_argument("classical shallow water has no momentum operator");
}

void check_state(std::span<const double> a, std::span<const double> H, const Grid& g) {
    if (a.size() != g.size() || H.size() != g.size()) {
        throw std::invalid_argument("state size does not match grid");
    }
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (!(H[i] > 0.0)) {
            throw std::invalid_argument("depth must stay positive (H[" + std::to_string(i) +
                                        "] = " + std::to_string(H[i]) + ")");
        }
    }
}

MomentumState m_from_u(const State& s, const Grid& g, ModelKind kind) {
    const OperatorKind op_kind = operator_kind(kind);
    check_state(s.u, s.H, g);
    return {apply_operator(assemble(s.H, g, op_kind), s.u), s.H};
}

State u_from_m(const MomentumState& ms, const Grid& g, ModelKind kind) {
    const OperatorKind op_kind = operator_kind(kind);
    check_state(ms.m, ms.H, g);
    return {solve(assemble(ms.H, g, op_kind), ms.m), ms.H};
}

Tendency rhs_hamiltonian(const MomentumState& ms, const Grid& g, ModelKind kind,
                         MomentumForm form) {
    const State s = u_from_m(ms, g, kind);
    return rhs_hamiltonian(ms, s.u, g, kind, form);
}

Tendency rhs_hamiltonian(const MomentumState& ms, std::span<const double> u, const Grid& g,
                         ModelKind kind, MomentumForm form) {
    operator_kind(kind);
    check_state(ms.m, ms.H, g);
    if (u.size() != g.size()) {
        throw std::invalid_argument("velocity size does not match grid");
    }
    const std::size_t n = g.size();
    const auto& m = ms.m;
    const auto& H = ms.H;

    Field hu(n);
    for (std::size_t i = 0; i < n; ++i) {
        hu[i] = H[i] * u[i];
    }
    Field dH = diff1(hu, g);
    for (double& v : dH) {
        v = -v;
    }

    Field dm(n);
    if (form == MomentumForm::Flux) {
        if (kind != ModelKind::NewSystem) {
            throw std::invalid_argument("flux-form momentum is defined for the new system only");
        }
        const State s{Field(u.begin(), u.end()), H};
        const Field flux = momentum_flux(s, g);
        const Field div = diff1(flux, g);
        for (std::size_t i = 0; i < n; ++i) {
            dm[i] = -div[i];
        }
        return {std::move(dm), std::move(dH)};
    }

    const State s{Field(u.begin(), u.end()), H};
    const Field delta = delta_H_delta_H(s, g, kind);
    Field mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        mu[i] = m[i] * u[i];
    }
    const Field d_mu = diff1(mu, g);
    const Field d_u = diff1(u, g);
    const Field d_delta = diff1(delta, g);
    for (std::size_t i = 0; i < n; ++i) {
        dm[i] = -(d_mu[i] + m[i] * d_u[i]) - H[i] * d_delta[i];
    }
    return {std::move(dm), std::move(dH)};
}

Tendency rhs_primitive_swe(const State& s, const Grid& g, double viscosity) {
    check_state(s.u, s.H, g);
    if (!(viscosity >= 0.0)) {
        throw std::invalid_argument("viscosity must be non-negative");
    }
    const std::size_t n = g.size();
    const Field d_u = diff1(s.u, g);
    const Field d_H = diff1(s.H, g);
    Field hu(n);
    for (std::size_t i = 0; i < n; ++i) {
        hu[i] = s.H[i] * s.u[i];
    }
    const Field d_hu = diff1(hu, g);

    Tendency out{Field(n), Field(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.first[i] = -(s.u[i] * d_u[i] + d_H[i]);
        out.dH[i] = -d_hu[i];
    }
    if (viscosity > 0.0) {
        const Field lap = diff2(s.u, g);
        for (std::size_t i = 0; i < n; ++i) {
            out.first[i] += viscosity * lap[i];
        }
    }
    return out;
}

VerticalStructure reconstruct_fields(const State& s, const Grid& g,
                                     std::span<const double> z_levels) {
    check_state(s.u, s.H, g);
    const double h_max = *std::max_element(s.H.begin(), s.H.end());
    for (double z : z_levels) {
        if (!(z >= 0.0) || z > h_max) {
            throw std::invalid_argument("z level " + std::to_string(z) + " outside [0, max H]");
        }
    }
    const Field u_x = diff1(s.u, g);
    VerticalStructure out;
    out.z_levels.assign(z_levels.begin(), z_levels.end());
    out.v.reserve(z_levels.size());
    for (double z : z_levels) {
        Field v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            v[i] = -z * u_x[i];
        }
        out.v.push_back(std::move(v));
    }
    out.p.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.p[i] = s.H[i] - 1.0;
    }
    return out;
}

double ScalingParams::wave_speed() const { return std::sqrt(gravity * h0); }

void ScalingParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(name) + " must be positive");
        }
    };
    positive(h0, "h0");
    positive(lambda, "lambda");
    positive(amplitude, "amplitude");
    positive(gravity, "gravity");
}

FlowSample nondimensionalize(const ScalingParams& sp, const FlowSample& d) {
    sp.validate();
    const double c0 = sp.wave_speed();
    FlowSample out;
    out.x = d.x / sp.lambda;
    out.z = d.z / sp.h0;
    out.t = c0 / sp.lambda * d.t;
    out.eta = d.eta / sp.amplitude;
    out.u = d.u / c0;
    out.v = sp.lambda / (sp.h0 * c0) * d.v;
    return out;
}

FlowSample dimensionalize(const ScalingParams& sp, const FlowSample& nd) {
    sp.validate();
    const double c0 = sp.wave_speed();
    FlowSample out;
    out.x = nd.x * sp.lambda;
    out.z = nd.z * sp.h0;
    out.t = nd.t * sp.lambda / c0;
    out.eta = nd.eta * sp.amplitude;
    out.u = nd.u * c0;
    out.v = nd.v * sp.h0 * c0 / sp.lambda;
    return out;
}

double depth_from_elevation(const ScalingParams& sp, double eta) {
    sp.validate();
    return 1.0 + sp.epsilon() * eta;
}

}  // namespace hamsw
