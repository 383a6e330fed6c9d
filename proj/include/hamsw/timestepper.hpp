#pragma once

#include <optional>
#include <vector>

#include "hamsw/conservation.hpp"
#include "hamsw/grid.hpp"
#include "hamsw/models.hpp"

namespace hamsw {

struct InitialCondition {
    enum class Type { Rest, Soliton, Gaussian };

    Type type = Type::Rest;
    double c = 0.0;          // soliton speed
    double center = 0.0;     // soliton crest / gaussian center
    double amplitude = 0.0;  // gaussian
    double width = 1.0;      // gaussian
};

struct RunConfig {
    ModelKind model = ModelKind::NewSystem;
    std::size_t n = 0;
    double length = 0.0;
    double x0 = 0.0;
    std::optional<double> dt;  // empty means "auto"
    double t_end = 0.0;
    double snapshot_every = 0.0;
    InitialCondition initial;
    double cfl = 0.4;
    double viscosity = 0.0;
    double blowup_threshold = 1e3;
    MomentumForm momentum_form = MomentumForm::SkewAdjoint;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

struct Snapshot {
    double t = 0.0;
    State state;
    Field m;
};

struct RunResult {
    Grid grid;
    std::vector<Snapshot> snapshots;
    std::vector<Diagnostics> diagnostics;
    std::size_t steps = 0;
};

/// Initial primitive state sampled on the grid.
State initial_state(const InitialCondition& ic, const Grid& g, ModelKind model);

/// Exact solitary-wave state of `model` with crest at center + c t (periodic image).
State exact_soliton_state(ModelKind model, double c, double center, double t, const Grid& g);

/// cfl * dx / max_i(|u_i| + sqrt(H_i)).
double suggest_dt(const State& s, const Grid& g, double cfl);
double suggest_dt(const MomentumState& ms, const Grid& g, double cfl, ModelKind kind);

/// Classic four-stage Runge-Kutta on (m, H). Throws NumericalError on depth positivity loss.
MomentumState rk4_step(const MomentumState& ms, double dt, const Grid& g, ModelKind kind,
                       MomentumForm form = MomentumForm::SkewAdjoint);

/// Classic four-stage Runge-Kutta on (u, H) for the classical shallow-water model.
State rk4_step_swe(const State& s, double dt, const Grid& g, double viscosity = 0.0);

RunResult run(const RunConfig& cfg);

/// Relative L2 error sqrt(int (du^2 + dH^2)) / sqrt(int (u_ref^2 + (H_ref-1)^2)).
double relative_l2_error(const State& s, const State& ref, const Grid& g);
double max_error(const State& s, const State& ref);

}  // namespace hamsw
