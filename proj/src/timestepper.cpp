#include "hamsw/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hamsw/errors.hpp"
#include "hamsw/solitons.hpp"

namespace hamsw {

namespace {

bool is_dispersive(ModelKind kind) { return kind != ModelKind::ClassicalShallowWater; }

// a + s * b
Field axpy(std::span<const double> a, double s, std::span<const double> b) {
    Field out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + s * b[i];
    }
    return out;
}

Field rk4_combine(std::span<const double> y, double dt, const Field& k1, const Field& k2,
                  const Field& k3, const Field& k4) {
    Field out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

void require_depth(std::span<const double> H, int stage) {
    const auto it = std::min_element(H.begin(), H.end());
    if (!(*it > 0.0)) {
        throw NumericalError("depth positivity lost at stage " + std::to_string(stage) +
                             " (min H = " + std::to_string(*it) + ")");
    }
}

Field stage_velocity(const MomentumState& ms, const Grid& g, ModelKind kind) {
    return solve(assemble(ms.H, g, operator_kind(kind)), ms.m);
}

// One RK4 step with the velocity of the current state already known.
MomentumState rk4_step_known(const MomentumState& ms, std::span<const double> u, double dt,
                             const Grid& g, ModelKind kind, MomentumForm form) {
    require_depth(ms.H, 1);
    const Tendency k1 = rhs_hamiltonian(ms, u, g, kind, form);

    MomentumState s2{axpy(ms.m, 0.5 * dt, k1.first), axpy(ms.H, 0.5 * dt, k1.dH)};
    require_depth(s2.H, 2);
    const Tendency k2 = rhs_hamiltonian(s2, stage_velocity(s2, g, kind), g, kind, form);

    MomentumState s3{axpy(ms.m, 0.5 * dt, k2.first), axpy(ms.H, 0.5 * dt, k2.dH)};
    require_depth(s3.H, 3);
    const Tendency k3 = rhs_hamiltonian(s3, stage_velocity(s3, g, kind), g, kind, form);

    MomentumState s4{axpy(ms.m, dt, k3.first), axpy(ms.H, dt, k3.dH)};
    require_depth(s4.H, 4);
    const Tendency k4 = rhs_hamiltonian(s4, stage_velocity(s4, g, kind), g, kind, form);

    return {rk4_combine(ms.m, dt, k1.first, k2.first, k3.first, k4.first),
            rk4_combine(ms.H, dt, k1.dH, k2.dH, k3.dH, k4.dH)};
}

void check_gradient(const State& s, const Grid& g, double threshold) {
    const Field u_x = diff1(s.u, g);
    double worst = 0.0;
    for (double v : u_x) {
        worst = std::max(worst, std::abs(v));
    }
    if (!(worst <= threshold)) {
        throw NumericalError("velocity gradient blow-up guard tripped (max |u_x| = " +
                             std::to_string(worst) + ")");
    }
}

}  // namespace

void RunConfig::validate() const {
    if (n < 8 || n % 2 != 0) {
        throw ConfigError("n must be an even integer >= 8");
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw ConfigError("length must be positive");
    }
    if (!std::isfinite(x0)) {
        throw ConfigError("x0 must be finite");
    }
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw ConfigError("t_end must be positive");
    }
    if (!(snapshot_every > 0.0) || !std::isfinite(snapshot_every)) {
        throw ConfigError("snapshot_every must be positive");
    }
    if (dt && (!(*dt > 0.0) || !std::isfinite(*dt))) {
        throw ConfigError("dt must be positive or \"auto\"");
    }
    if (!(cfl > 0.0) || !std::isfinite(cfl)) {
        throw ConfigError("cfl must be positive");
    }
    if (!(viscosity >= 0.0) || !std::isfinite(viscosity)) {
        throw ConfigError("viscosity must be non-negative");
    }
    if (viscosity > 0.0 && model != ModelKind::ClassicalShallowWater) {
        throw ConfigError("viscosity applies to model swe only");
    }
    if (!(blowup_threshold > 0.0)) {
        throw ConfigError("blowup_threshold must be positive");
    }
    if (momentum_form == MomentumForm::Flux && model != ModelKind::NewSystem) {
        throw ConfigError("momentum_form flux applies to model new only");
    }
    switch (initial.type) {
        case InitialCondition::Type::Rest:
            break;
        case InitialCondition::Type::Soliton:
            if (!(initial.c > 1.0)) {
                throw ConfigError("initial.c: c must exceed 1");
            }
            if (model == ModelKind::ClassicalShallowWater) {
                throw ConfigError("initial.type: soliton data requires a dispersive model");
            }
            break;
        case InitialCondition::Type::Gaussian:
            if (!(initial.width > 0.0)) {
                throw ConfigError("initial.width must be positive");
            }
            if (!(initial.amplitude > -1.0)) {
                throw ConfigError("initial.amplitude must exceed -1 (depth stays positive)");
            }
            break;
    }
}

State exact_soliton_state(ModelKind model, double c, double center, double t, const Grid& g) {
    validate_speed(c);
    const SolitonParams p{c, true};
    State s{Field(g.size()), Field(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double xi = g.periodic_offset(g.x(i), center + c * t);
        ProfilePoint pt;
        switch (model) {
            case ModelKind::NewSystem:
                pt = soliton_new(p, xi);
                break;
            case ModelKind::GreenNaghdi:
                pt = soliton_gn(p, xi);
                break;
            case ModelKind::ClassicalShallowWater:
                throw std::invalid_argument("classical shallow water has no solitary wave");
        }
        s.u[i] = pt.u;
        s.H[i] = pt.H;
    }
    return s;
}

State initial_state(const InitialCondition& ic, const Grid& g, ModelKind model) {
    switch (ic.type) {
        case InitialCondition::Type::Rest:
            return {Field(g.size(), 0.0), Field(g.size(), 1.0)};
        case InitialCondition::Type::Soliton:
            return exact_soliton_state(model, ic.c, ic.center, 0.0, g);
        case InitialCondition::Type::Gaussian: {
            State s{Field(g.size(), 0.0), Field(g.size())};
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double d = g.periodic_offset(g.x(i), ic.center) / ic.width;
                s.H[i] = 1.0 + ic.amplitude * std::exp(-d * d);
            }
            return s;
        }
    }
    throw std::invalid_argument("unknown initial condition");
}

double suggest_dt(const State& s, const Grid& g, double cfl) {
    check_state(s.u, s.H, g);
    double speed = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        speed = std::max(speed, std::abs(s.u[i]) + std::sqrt(s.H[i]));
    }
    if (!(speed > 0.0)) {
        return cfl * g.dx();
    }
    return cfl * g.dx() / speed;
}

double suggest_dt(const MomentumState& ms, const Grid& g, double cfl, ModelKind kind) {
    return suggest_dt(u_from_m(ms, g, kind), g, cfl);
}

MomentumState rk4_step(const MomentumState& ms, double dt, const Grid& g, ModelKind kind,
                       MomentumForm form) {
    if (!(dt != 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("time step must be nonzero and finite");
    }
    require_depth(ms.H, 1);
    return rk4_step_known(ms, stage_velocity(ms, g, kind), dt, g, kind, form);
}

State rk4_step_swe(const State& s, double dt, const Grid& g, double viscosity) {
    require_depth(s.H, 1);
    const Tendency k1 = rhs_primitive_swe(s, g, viscosity);
    State s2{axpy(s.u, 0.5 * dt, k1.first), axpy(s.H, 0.5 * dt, k1.dH)};
    require_depth(s2.H, 2);
    const Tendency k2 = rhs_primitive_swe(s2, g, viscosity);
    State s3{axpy(s.u, 0.5 * dt, k2.first), axpy(s.H, 0.5 * dt, k2.dH)};
    require_depth(s3.H, 3);
    const Tendency k3 = rhs_primitive_swe(s3, g, viscosity);
    State s4{axpy(s.u, dt, k3.first), axpy(s.H, dt, k3.dH)};
    require_depth(s4.H, 4);
    const Tendency k4 = rhs_primitive_swe(s4, g, viscosity);
    return {rk4_combine(s.u, dt, k1.first, k2.first, k3.first, k4.first),
            rk4_combine(s.H, dt, k1.dH, k2.dH, k3.dH, k4.dH)};
}

RunResult run(const RunConfig& cfg) {
    cfg.validate();
    RunResult result{Grid::build(cfg.n, cfg.length, cfg.x0), {}, {}, 0};
    const Grid& g = result.grid;
    const bool dispersive = is_dispersive(cfg.model);

    State state = initial_state(cfg.initial, g, cfg.model);
    MomentumState ms;
    if (dispersive) {
        ms = m_from_u(state, g, cfg.model);
    }

    double t = 0.0;
    std::size_t next_snapshot = 1;
    bool capture = true;
    for (;;) {
        Field m;
        if (dispersive) {
            state = State{stage_velocity(ms, g, cfg.model), ms.H};
            m = ms.m;
        } else {
            m.resize(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) {
                m[i] = state.H[i] * state.u[i];
            }
            check_gradient(state, g, cfg.blowup_threshold);
        }
        result.diagnostics.push_back(diagnose(t, state, m, g, cfg.model));
        if (capture) {
            result.snapshots.push_back({t, state, m});
        }
        if (t >= cfg.t_end) {
            break;
        }

        const double snapshot_time =
            std::min(static_cast<double>(next_snapshot) * cfg.snapshot_every, cfg.t_end);
        double dt = cfg.dt ? *cfg.dt : suggest_dt(state, g, cfg.cfl);
        capture = false;
        double t_next = t + dt;
        if (t_next >= snapshot_time - 1e-6 * dt) {
            dt = snapshot_time - t;
            t_next = snapshot_time;
            capture = true;
            ++next_snapshot;
        }

        if (dispersive) {
            ms = rk4_step_known(ms, state.u, dt, g, cfg.model, cfg.momentum_form);
        } else {
            state = rk4_step_swe(state, dt, g, cfg.viscosity);
        }
        t = t_next;
        ++result.steps;
    }
    return result;
}

double relative_l2_error(const State& s, const State& ref, const Grid& g) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double du = s.u[i] - ref.u[i];
        const double dh = s.H[i] - ref.H[i];
        num += du * du + dh * dh;
        den += ref.u[i] * ref.u[i] + (ref.H[i] - 1.0) * (ref.H[i] - 1.0);
    }
    if (den == 0.0) {
        return std::sqrt(num * g.dx());
    }
    return std::sqrt(num / den);
}

double max_error(const State& s, const State& ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        worst = std::max({worst, std::abs(s.u[i] - ref.u[i]), std::abs(s.H[i] - ref.H[i])});
    }
    return worst;
}

}  // namespace hamsw
