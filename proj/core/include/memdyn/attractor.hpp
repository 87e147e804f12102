#pragma once

#include <optional>
#include <vector>

#include "memdyn/drive.hpp"
#include "memdyn/model.hpp"

namespace memdyn {

/// Per-period pulse strengths a_plus = h(i_plus) * tau_plus (> 0) and
/// a_minus = h(i_minus) * tau_minus (< 0).
struct PulseStrengths {
    double a_plus = 0.0;
    double a_minus = 0.0;

    [[nodiscard]] double alpha() const { return a_plus / a_minus; }
};

/// Strengths of a pulse train under a model's activation. Throws
/// std::invalid_argument when either polarity is inactive (a_plus <= 0 or
/// a_minus >= 0), e.g. when a threshold activation blocks one pulse.
PulseStrengths pulse_strengths(const MemristorModel& m, const PulseTrain& p);

enum class FixedPointKind { Stable, Neutral, None };

struct FixedPointReport {
    std::optional<double> x_a;
    FixedPointKind kind = FixedPointKind::None;
    /// Per-period contraction rate at x_a (negative for a stable point).
    double stability_value = 0.0;
    /// |f(x_a, i_plus) tau_plus + f(x_a, i_minus) tau_minus| at x_a, or the
    /// largest such magnitude over the scan grid for a neutral drive.
    double residual = 0.0;
};

/// Right-hand side of the one-period averaged state equation at x:
/// the per-segment sum f(x, i) * duration / T for rectangular drives, and
/// (1/T) * integral of f(x, I(t)) over one period (composite quadrature,
/// 512 panels) for sinusoid/triangle drives.
double averaged_rhs(const MemristorModel& m, const Waveform& w, double x);

/// Locates and classifies the attractor of the averaged dynamics. Scans
/// averaged_rhs over a 1024-cell grid on [0, 1], refines every sign change by
/// bisection to tol, and evaluates the per-period stability derivative by
/// central differences. An identically-zero averaged rate (scale-relative
/// threshold) reports Neutral; no stable root reports None.
FixedPointReport find_fixed_point(const MemristorModel& m, const Waveform& w,
                                  double tol = 1e-12);

/// Attractor location for a p = 1 Biolek-window device driven by pulses with
/// strength ratio alpha = a_plus / a_minus < 0. Continuous through alpha = -1,
/// where the value is exactly 1/2.
double biolek_xa_closed_form(double alpha);

/// Unique root on [0, 1] of
/// a_plus (1 - x^(2p)) + a_minus (1 - (x - 1)^(2p)) = 0, by bisection.
double biolek_fixed_point_general(int p, const PulseStrengths& s, double tol = 1e-12);

struct PotentialCurve {
    std::vector<double> x;
    std::vector<double> u_numeric;
    /// Closed-form values for Joglekar/Biolek windows under rectangular
    /// drives; absent otherwise. Both columns are anchored to U(0) = 0.
    std::optional<std::vector<double>> u_closed_form;
};

/// U(x) = -integral from 0 to x of the one-period bracket
/// f(s, i_plus) tau_plus + f(s, i_minus) tau_minus, sampled on a uniform
/// grid of grid_n points; minima are stable fixed points.
PotentialCurve potential(const MemristorModel& m, const Waveform& w, int grid_n);

struct SweepAxis {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
};

struct SweepGrid {
    std::vector<double> a_plus;
    std::vector<double> a_minus;
    /// Row-major over (a_plus, a_minus); absent for cells whose strengths
    /// violate the sign preconditions.
    std::vector<std::optional<double>> x_a;

    [[nodiscard]] const std::optional<double>& at(std::size_t i, std::size_t j) const {
        return x_a[i * a_minus.size() + j];
    }
};

/// Fills a (a_plus x a_minus) grid with Biolek attractor locations.
SweepGrid sweep_xa(const SweepAxis& plus_axis, const SweepAxis& minus_axis, int p,
                   double tol = 1e-12);

struct SectionPoint {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double x_a = 0.0;
};

/// 1-D section along a_minus = a_plus + offset (offset < 0), sampled at
/// n_points cell centres of a_plus in (0, -offset).
std::vector<SectionPoint> sweep_section(int p, int n_points, double offset = -10.0,
                                        double tol = 1e-12);

}  // namespace memdyn
