#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hamsw/config.hpp"

namespace hamsw {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind { Propagate, Conserve, Convergence, Compare, Exact, Simulate };

/// Options of the `exact` subcommand.
struct ExactOptions {
    double c = 2.0;
    std::size_t samples = 1024;
    double xi_max = 20.0;
};

struct ConvergenceReport {
    std::vector<std::size_t> n;
    std::vector<double> spatial_error;
    std::vector<double> spatial_order;
    std::vector<double> dt;
    std::vector<double> temporal_difference;
    std::vector<double> temporal_order;
};

/// Spatial ladder (n, 2n, 4n, ... against the exact soliton) and temporal self-convergence
/// (dt, dt/2, dt/4 on the base grid). Requires soliton initial data.
ConvergenceReport convergence_study(const ExperimentConfig& cfg);

/// Each command writes its files under `out` (created if needed), reports to `log`, and
/// returns 0. Errors propagate as ConfigError / NumericalError.
int cmd_simulate(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_propagate(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_conserve(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_convergence(const ExperimentConfig& cfg, const std::filesystem::path& out,
                    std::ostream& log);
int cmd_compare(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_exact(const ExactOptions& opts, const std::filesystem::path& out, std::ostream& log);

/// Writes `<out>/run.meta.json`: subcommand, version, config echo.
void write_metadata(const std::filesystem::path& out, const std::string& subcommand,
                    const std::string& config_text);

}  // namespace hamsw
