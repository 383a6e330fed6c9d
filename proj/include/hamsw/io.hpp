#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "hamsw/conservation.hpp"
#include "hamsw/grid.hpp"
#include "hamsw/models.hpp"

namespace hamsw {

/// CSV with header `x,u,H,m`, one row per node, 17 significant digits.
void write_snapshot(const State& s, std::span<const double> m, const Grid& g,
                    const std::filesystem::path& path);

struct SnapshotTable {
    Field x;
    Field u;
    Field H;
    Field m;
};

SnapshotTable read_snapshot(const std::filesystem::path& path);

/// CSV with header `t,mass,energy,total_momentum,max_H,max_u`.
void write_diagnostics(std::span<const Diagnostics> records, const std::filesystem::path& path);

std::vector<Diagnostics> read_diagnostics(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double with 17 significant digits.
std::string format_real(double v);

}  // namespace hamsw
