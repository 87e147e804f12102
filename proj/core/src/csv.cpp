#include "memdyn/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace memdyn {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& tr) {
    auto out = open_for_write(path);
    out << "t,x,xbar\n";
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        out << format_double(tr.times[k]) << ',' << format_double(tr.states[k]) << ',';
        if (k < tr.averaged.size()) out << format_double(tr.averaged[k]);
        out << '\n';
    }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepGrid& grid) {
    auto out = open_for_write(path);
    out << "a_plus,a_minus,x_a\n";
    for (std::size_t i = 0; i < grid.a_plus.size(); ++i) {
        for (std::size_t j = 0; j < grid.a_minus.size(); ++j) {
            out << format_double(grid.a_plus[i]) << ',' << format_double(grid.a_minus[j])
                << ',';
            if (const auto& cell = grid.at(i, j)) out << format_double(*cell);
            out << '\n';
        }
    }
}

void write_section_csv(const std::filesystem::path& path,
                       const std::vector<SectionPoint>& section) {
    auto out = open_for_write(path);
    out << "a_plus,a_minus,x_a\n";
    for (const auto& pt : section)
        out << format_double(pt.a_plus) << ',' << format_double(pt.a_minus) << ','
            << format_double(pt.x_a) << '\n';
}

void write_potential_csv(const std::filesystem::path& path, const PotentialCurve& curve) {
    auto out = open_for_write(path);
    out << "x,U_numeric,U_closed_form\n";
    for (std::size_t k = 0; k < curve.x.size(); ++k) {
        out << format_double(curve.x[k]) << ',' << format_double(curve.u_numeric[k]) << ',';
        if (curve.u_closed_form) out << format_double((*curve.u_closed_form)[k]);
        out << '\n';
    }
}

}  // namespace memdyn
