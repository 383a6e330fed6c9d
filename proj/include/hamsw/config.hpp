#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamsw/timestepper.hpp"

namespace hamsw {

/// Everything a config document may carry: the run itself plus experiment options.
struct ExperimentConfig {
    RunConfig run;
    std::vector<double> speeds{1.1, 1.5, 2.0, 3.0};  // compare
    std::size_t levels = 3;                          // convergence ladder length
};

/**
 * Strict JSON config parser.
 *
 * Required keys: model ("new" | "gn" | "swe"), n, length, t_end.
 * Optional: x0 (default -length/2), dt (number or "auto"), snapshot_every (default t_end),
 * initial ({type: rest | soliton{c, center} | gaussian{amplitude, width, center}}),
 * cfl, viscosity, blowup_threshold, momentum_form ("skew" | "flux"), speeds, levels.
 * Unknown keys, type mismatches and invariant violations throw ConfigError naming the key.
 */
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::string& path);

/// Canonical JSON echo of a parsed config (all defaults filled in).
std::string to_json(const ExperimentConfig& cfg);

}  // namespace hamsw
