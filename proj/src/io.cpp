#include "hamsw/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hamsw {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    return out;
}

std::vector<std::vector<double>> read_table(const std::filesystem::path& path,
                                            const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw std::runtime_error("'" + path.string() + "': expected header " + expected_header);
    }
    const std::size_t columns = static_cast<std::size_t>(
        std::count(expected_header.begin(), expected_header.end(), ',') + 1);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        if (row.size() != columns) {
            throw std::runtime_error("'" + path.string() + "': malformed row: " + line);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

void write_snapshot(const State& s, std::span<const double> m, const Grid& g,
                    const std::filesystem::path& path) {
    check_state(s.u, s.H, g);
    if (m.size() != g.size()) {
        throw std::invalid_argument("write_snapshot: momentum size does not match grid");
    }
    auto out = open_for_write(path);
    out << "x,u,H,m\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", g.x(i), s.u[i], s.H[i], m[i]);
    }
}

SnapshotTable read_snapshot(const std::filesystem::path& path) {
    SnapshotTable t;
    for (const auto& row : read_table(path, "x,u,H,m")) {
        t.x.push_back(row[0]);
        t.u.push_back(row[1]);
        t.H.push_back(row[2]);
        t.m.push_back(row[3]);
    }
    return t;
}

void write_diagnostics(std::span<const Diagnostics> records, const std::filesystem::path& path) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (!(records[i].t > records[i - 1].t)) {
            throw std::invalid_argument("diagnostics must be recorded at increasing times");
        }
    }
    auto out = open_for_write(path);
    out << "t,mass,energy,total_momentum,max_H,max_u\n";
    for (const auto& d : records) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", d.t, d.mass,
                           d.energy, d.total_momentum, d.max_H, d.max_u);
    }
}

std::vector<Diagnostics> read_diagnostics(const std::filesystem::path& path) {
    std::vector<Diagnostics> out;
    for (const auto& r : read_table(path, "t,mass,energy,total_momentum,max_H,max_u")) {
        out.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
    }
    return out;
}

}  // namespace hamsw
