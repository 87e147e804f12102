#pragma once

#include <vector>

#include "memdyn/drive.hpp"
#include "memdyn/errors.hpp"
#include "memdyn/model.hpp"

namespace memdyn {

struct SimConfig {
    double x0 = 0.5;
    int periods = 1;
    /// Sub-steps per constant-current segment of a rectangular drive.
    int steps_per_segment = 16;
    /// Time step for sinusoid/triangle drives; must divide the period.
    double dt = 0.0;
    /// Keep every record_stride-th sample; must divide the per-period count.
    int record_stride = 1;
    double clamp_tol = kDefaultClampTol;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<double> states;
    /// Forward one-period moving average; defined only where the window
    /// [t, t + T] lies inside the record, so it is one period shorter.
    std::vector<double> averaged;
};

/// Integrates the state equation over c.periods drive periods with a classical
/// fixed-step 4th-order scheme. Rectangular drives are integrated segment by
/// segment so no step straddles a current discontinuity; smooth drives use the
/// fixed step c.dt. The state is clamped to [0, 1] after every step; leaving
/// the interval beyond c.clamp_tol raises NumericalError.
Trajectory integrate(const MemristorModel& m, const Waveform& w, const SimConfig& c);

/// Final state after one constant-current stretch integrated with n_steps
/// 4th-order steps.
double integrate_segment(const MemristorModel& m, double x0, double current,
                         double duration, int n_steps,
                         double clamp_tol = kDefaultClampTol);

/// xbar(t) = (1/T) * integral of x over [t, t + T], by trapezoidal quadrature
/// on the recorded samples. The record must span at least one period and be
/// period-aligned.
std::vector<double> moving_average(const Trajectory& tr, double period);

struct LimitCycleReport {
    bool periodic = false;
    /// max |x(t + T) - x(t)| over the final recorded period.
    double residual = 0.0;
};

/// Compares the last two recorded periods point-wise.
LimitCycleReport detect_limit_cycle(const Trajectory& tr, double period, double eps = 1e-6);

}  // namespace memdyn
