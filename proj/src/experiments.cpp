#include "hamsw/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>

#include "json.hpp"

#include "hamsw/errors.hpp"
#include "hamsw/io.hpp"
#include "hamsw/solitons.hpp"

namespace hamsw {

namespace {

namespace fs = std::filesystem;

void require_soliton(const RunConfig& cfg, const char* command) {
    if (cfg.initial.type != InitialCondition::Type::Soliton) {
        throw ConfigError(std::string(command) + " requires soliton initial data");
    }
}

std::ofstream open_csv(const fs::path& path) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    return out;
}

std::vector<std::string> write_run(const RunResult& r, const fs::path& out) {
    std::vector<std::string> files;
    auto index = open_csv(out / "snapshots.csv");
    index << "index,t,file\n";
    for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
        const auto& snap = r.snapshots[k];
        const std::string name = fmt::format("snapshot_{:05d}.csv", k);
        write_snapshot(snap.state, snap.m, r.grid, out / name);
        index << fmt::format("{},{:.17g},{}\n", k, snap.t, name);
        files.push_back(name);
    }
    files.push_back("snapshots.csv");
    write_diagnostics(r.diagnostics, out / "diagnostics.csv");
    files.push_back("diagnostics.csv");
    return files;
}

struct Drift {
    double mass = 0.0;
    double energy = 0.0;
    double momentum = 0.0;
};

Drift max_relative_drift(const std::vector<Diagnostics>& records) {
    Drift d;
    if (records.empty()) {
        return d;
    }
    const Diagnostics& first = records.front();
    for (const auto& r : records) {
        d.mass = std::max(d.mass, std::abs(r.mass - first.mass) / (1.0 + std::abs(first.mass)));
        d.momentum = std::max(d.momentum, std::abs(r.total_momentum - first.total_momentum) /
                                              (1.0 + std::abs(first.total_momentum)));
        d.energy = std::max(d.energy, std::abs(r.energy - first.energy) /
                                          std::max(1.0, std::abs(first.energy)));
    }
    return d;
}

double observed_order(double coarse, double fine, double ratio = 2.0) {
    return std::log(coarse / fine) / std::log(ratio);
}

}  // namespace

void write_metadata(const fs::path& out, const std::string& subcommand,
                    const std::string& config_text) {
    nlohmann::json meta;
    meta["tool"] = "hamsw";
    meta["version"] = kVersion;
    meta["subcommand"] = subcommand;
    meta["config"] = config_text.empty() ? nlohmann::json() : nlohmann::json::parse(config_text);
    fs::create_directories(out);
    std::ofstream f(out / "run.meta.json", std::ios::binary);
    f << meta.dump(2) << '\n';
}

int cmd_simulate(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const RunResult r = run(cfg.run);
    write_run(r, out);
    write_metadata(out, "simulate", to_json(cfg));
    log << fmt::format("simulate: model {} n {} steps {} snapshots {} t_end {:.6g}\n",
                       to_string(cfg.run.model), cfg.run.n, r.steps, r.snapshots.size(),
                       r.diagnostics.back().t);
    return 0;
}

int cmd_propagate(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    require_soliton(cfg.run, "propagate");
    const RunResult r = run(cfg.run);
    write_run(r, out);
    const auto& final = r.snapshots.back();
    const State exact = exact_soliton_state(cfg.run.model, cfg.run.initial.c,
                                            cfg.run.initial.center, final.t, r.grid);
    const double l2 = relative_l2_error(final.state, exact, r.grid);
    const double linf = max_error(final.state, exact);

    auto csv = open_csv(out / "propagate.csv");
    csv << "n,t_end,rel_l2_error,max_error\n";
    csv << fmt::format("{},{:.17g},{:.17g},{:.17g}\n", cfg.run.n, final.t, l2, linf);
    write_metadata(out, "propagate", to_json(cfg));
    log << fmt::format("propagate: model {} c {:.6g} n {} t {:.6g}: rel L2 error {:.6e}, max error {:.6e}\n",
                       to_string(cfg.run.model), cfg.run.initial.c, cfg.run.n, final.t, l2, linf);
    return 0;
}

int cmd_conserve(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const RunResult r = run(cfg.run);
    write_diagnostics(r.diagnostics, out / "diagnostics.csv");
    const Drift d = max_relative_drift(r.diagnostics);
    auto csv = open_csv(out / "drift.csv");
    csv << "quantity,max_relative_drift\n";
    csv << fmt::format("mass,{:.17g}\nenergy,{:.17g}\ntotal_momentum,{:.17g}\n", d.mass, d.energy,
                       d.momentum);
    write_metadata(out, "conserve", to_json(cfg));
    log << fmt::format("conserve: model {} steps {}\n  mass drift     {:.3e}\n  energy drift   {:.3e}\n"
                       "  momentum drift {:.3e}\n",
                       to_string(cfg.run.model), r.steps, d.mass, d.energy, d.momentum);
    return 0;
}

ConvergenceReport convergence_study(const ExperimentConfig& cfg) {
    require_soliton(cfg.run, "convergence");
    const RunConfig& base = cfg.run;
    ConvergenceReport rep;

    // Spatial ladder with automatic time steps.
    std::vector<std::future<double>> spatial;
    for (std::size_t k = 0; k < cfg.levels; ++k) {
        RunConfig rc = base;
        rc.n = base.n << k;
        rc.snapshot_every = rc.t_end;
        rep.n.push_back(rc.n);
        spatial.push_back(std::async(std::launch::async, [rc] {
            const RunResult r = run(rc);
            const auto& last = r.snapshots.back();
            const State exact =
                exact_soliton_state(rc.model, rc.initial.c, rc.initial.center, last.t, r.grid);
            return relative_l2_error(last.state, exact, r.grid);
        }));
    }
    for (auto& f : spatial) {
        rep.spatial_error.push_back(f.get());
    }
    for (std::size_t k = 0; k + 1 < rep.spatial_error.size(); ++k) {
        rep.spatial_order.push_back(observed_order(rep.spatial_error[k], rep.spatial_error[k + 1]));
    }

    // Temporal self-convergence on the base grid with fixed steps that divide t_end.
    const Grid g = Grid::build(base.n, base.length, base.x0);
    double dt0 = base.dt ? *base.dt : suggest_dt(initial_state(base.initial, g, base.model), g, base.cfl);
    dt0 = base.t_end / std::ceil(base.t_end / dt0);
    std::vector<std::future<State>> temporal;
    for (std::size_t k = 0; k < cfg.levels; ++k) {
        RunConfig rc = base;
        rc.dt = dt0 / static_cast<double>(1u << k);
        rc.snapshot_every = rc.t_end;
        rep.dt.push_back(*rc.dt);
        temporal.push_back(std::async(std::launch::async, [rc] { return run(rc).snapshots.back().state; }));
    }
    std::vector<State> finals;
    for (auto& f : temporal) {
        finals.push_back(f.get());
    }
    for (std::size_t k = 0; k + 1 < finals.size(); ++k) {
        rep.temporal_difference.push_back(relative_l2_error(finals[k], finals[k + 1], g));
    }
    for (std::size_t k = 0; k + 1 < rep.temporal_difference.size(); ++k) {
        rep.temporal_order.push_back(
            observed_order(rep.temporal_difference[k], rep.temporal_difference[k + 1]));
    }
    return rep;
}

int cmd_convergence(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const ConvergenceReport rep = convergence_study(cfg);
    auto csv = open_csv(out / "convergence.csv");
    csv << "study,level,resolution,error,observed_order\n";
    log << "convergence: spatial ladder\n";
    for (std::size_t k = 0; k < rep.n.size(); ++k) {
        const std::string order = k == 0 ? "nan" : format_real(rep.spatial_order[k - 1]);
        csv << fmt::format("space,{},{},{:.17g},{}\n", k, rep.n[k], rep.spatial_error[k], order);
        log << fmt::format("  n {:6d}  rel L2 error {:.6e}  order {}\n", rep.n[k],
                           rep.spatial_error[k], k == 0 ? "-" : fmt::format("{:.3f}", rep.spatial_order[k - 1]));
    }
    log << "convergence: temporal self-convergence\n";
    for (std::size_t k = 0; k < rep.temporal_difference.size(); ++k) {
        const std::string order = k == 0 ? "nan" : format_real(rep.temporal_order[k - 1]);
        csv << fmt::format("time,{},{:.17g},{:.17g},{}\n", k, rep.dt[k], rep.temporal_difference[k],
                           order);
        log << fmt::format("  dt {:.6e}  |u(dt) - u(dt/2)| {:.6e}  order {}\n", rep.dt[k],
                           rep.temporal_difference[k],
                           k == 0 ? "-" : fmt::format("{:.3f}", rep.temporal_order[k - 1]));
    }
    write_metadata(out, "convergence", to_json(cfg));
    return 0;
}

int cmd_compare(const ExperimentConfig& cfg, const fs::path& out, std::ostream& log) {
    const Grid g = Grid::build(cfg.run.n, cfg.run.length, cfg.run.x0);
    const double center = g.x0() + 0.5 * g.length();
    auto csv = open_csv(out / "compare.csv");
    csv << "c,new_crest,gn_crest,new_mass,gn_mass,new_energy,gn_energy\n";
    log << "compare:      c   new crest    GN crest    new mass     GN mass  new energy   GN energy\n";
    for (double c : cfg.speeds) {
        validate_speed(c);
        const SolitonParams p{c, false};
        const double xc = crest_offset_new(c);
        const double arg = maximize_unimodal([&](double xi) { return soliton_new(p, xi).H; },
                                             xc - 10.0, xc + 10.0);
        const double new_crest = soliton_new(p, arg).H;
        const double gn_crest = soliton_gn(p, 0.0).H;

        const State s_new = exact_soliton_state(ModelKind::NewSystem, c, center, 0.0, g);
        const State s_gn = exact_soliton_state(ModelKind::GreenNaghdi, c, center, 0.0, g);
        const double m_new = mass(s_new, g);
        const double m_gn = mass(s_gn, g);
        const double e_new = energy(s_new, g, ModelKind::NewSystem);
        const double e_gn = energy(s_gn, g, ModelKind::GreenNaghdi);
        csv << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", c, new_crest,
                           gn_crest, m_new, m_gn, e_new, e_gn);
        log << fmt::format("        {:7.4f} {:11.6f} {:11.6f} {:11.6f} {:11.6f} {:11.6f} {:11.6f}\n",
                           c, new_crest, gn_crest, m_new, m_gn, e_new, e_gn);
    }
    write_metadata(out, "compare", to_json(cfg));
    return 0;
}

int cmd_exact(const ExactOptions& opts, const fs::path& out, std::ostream& log) {
    validate_speed(opts.c);
    if (!(opts.xi_max > 0.0)) {
        throw ConfigError("range must be positive");
    }
    if (opts.samples < 8 || opts.samples % 2 != 0) {
        throw ConfigError("samples must be an even integer >= 8");
    }
    const double c = opts.c;
    const Grid g = Grid::build(opts.samples, 2.0 * opts.xi_max, -opts.xi_max);
    const SolitonParams p{c, false};

    Field H_new(g.size());
    Field u_new(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const ProfilePoint pt = soliton_new(p, g.x(i));
        H_new[i] = pt.H;
        u_new[i] = pt.u;
    }
    const Field ode = check_traveling_ode(H_new, g, c);

    auto csv = open_csv(out / "exact.csv");
    csv << "xi,H_new,u_new,H_gn,u_gn,implicit_residual,ode_residual\n";
    double worst_implicit = 0.0;
    double worst_ode = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double xi = g.x(i);
        const ProfilePoint gn = soliton_gn(p, xi);
        std::string implicit = "nan";
        // The relation degenerates at the crest (H = c) and in the tails (H = 1).
        if (H_new[i] - 1.0 > 1e-6 && c - H_new[i] > 1e-6) {
            const double r = check_implicit(H_new[i], xi, c);
            worst_implicit = std::max(worst_implicit, std::abs(r) * std::exp(decay_rate(c) * xi));
            implicit = format_real(r);
        }
        worst_ode = std::max(worst_ode, std::abs(ode[i]));
        csv << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{:.17g}\n", xi, H_new[i],
                           u_new[i], gn.H, gn.u, implicit, ode[i]);
    }
    nlohmann::json echo{{"c", c}, {"samples", opts.samples}, {"range", opts.xi_max}};
    write_metadata(out, "exact", echo.dump());
    log << fmt::format("exact: c {:.6g}, {} samples on [-{:.6g}, {:.6g})\n  max relative implicit residual "
                       "{:.3e}\n  max |ODE residual| {:.3e}\n",
                       c, opts.samples, opts.xi_max, opts.xi_max, worst_implicit, worst_ode);
    return 0;
}

}  // namespace hamsw
