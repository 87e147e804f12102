#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "memdyn/attractor.hpp"
#include "memdyn/simulate.hpp"

namespace memdyn {

/// Decimal text with enough digits to reparse the exact double.
std::string format_double(double v);

/// Header `t,x,xbar`; the xbar column is empty where the forward averaging
/// window runs past the end of the record.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& tr);

/// Header `a_plus,a_minus,x_a`; empty x_a for skipped cells.
void write_sweep_csv(const std::filesystem::path& path, const SweepGrid& grid);

/// Header `a_plus,a_minus,x_a`, one row per section point.
void write_section_csv(const std::filesystem::path& path,
                       const std::vector<SectionPoint>& section);

/// Header `x,U_numeric,U_closed_form`; the closed-form column is empty when
/// no closed form applies.
void write_potential_csv(const std::filesystem::path& path, const PotentialCurve& curve);

}  // namespace memdyn
