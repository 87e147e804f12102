#include "memdyn/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace memdyn {

namespace {

// Runge-Kutta stages may poke marginally past a state boundary mid-step; pin
// them so the window stays evaluable. The full step is range-checked after.
double stage_rate(const MemristorModel& m, double x, double current, double clamp_tol) {
    return state_rate(m, std::clamp(x, 0.0, 1.0), current, clamp_tol);
}

double rk4_const(const MemristorModel& m, double x, double current, double h,
                 double clamp_tol) {
    const double k1 = stage_rate(m, x, current, clamp_tol);
    const double k2 = stage_rate(m, x + 0.5 * h * k1, current, clamp_tol);
    const double k3 = stage_rate(m, x + 0.5 * h * k2, current, clamp_tol);
    const double k4 = stage_rate(m, x + h * k3, current, clamp_tol);
    return x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double rk4_timed(const MemristorModel& m, const Waveform& w, double x, double t,
                 double h, double clamp_tol) {
    const double k1 = stage_rate(m, x, sample(w, t), clamp_tol);
    const double k2 = stage_rate(m, x + 0.5 * h * k1, sample(w, t + 0.5 * h), clamp_tol);
    const double k3 = stage_rate(m, x + 0.5 * h * k2, sample(w, t + 0.5 * h), clamp_tol);
    const double k4 = stage_rate(m, x + h * k3, sample(w, t + h), clamp_tol);
    return x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double settle(double x, double clamp_tol, double t) {
    if (x < -clamp_tol || x > 1.0 + clamp_tol)
        throw NumericalError("state diverged to x = " + std::to_string(x) +
                             " near t = " + std::to_string(t));
    return std::clamp(x, 0.0, 1.0);
}

void validate_config(const SimConfig& c) {
    if (c.periods < 1) throw std::invalid_argument("periods must be at least 1");
    if (c.steps_per_segment < 1)
        throw std::invalid_argument("steps_per_segment must be at least 1");
    if (c.record_stride < 1) throw std::invalid_argument("record_stride must be at least 1");
    if (c.clamp_tol < 0.0) throw std::invalid_argument("clamp_tol must be non-negative");
    if (c.x0 < -c.clamp_tol || c.x0 > 1.0 + c.clamp_tol)
        throw std::invalid_argument("x0 must lie in [0, 1]");
}

// Index distance covering exactly one period of samples; also verifies the
// record is period-aligned throughout.
std::size_t samples_per_period(const std::vector<double>& times, double period) {
    if (times.size() < 2) throw std::invalid_argument("record holds fewer than two samples");
    if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
    const double tol = 1e-9 * std::max(1.0, period);
    const double target = times.front() + period;
    auto it = std::lower_bound(times.begin(), times.end(), target - tol);
    if (it == times.end() || std::abs(*it - target) > tol)
        throw std::invalid_argument("record is shorter than one period or not period-aligned");
    const auto s = static_cast<std::size_t>(it - times.begin());
    for (std::size_t j = 0; j + s < times.size(); ++j)
        if (std::abs(times[j + s] - times[j] - period) > tol)
            throw std::invalid_argument("record samples are not period-aligned");
    return s;
}

}  // namespace

double integrate_segment(const MemristorModel& m, double x0, double current,
                         double duration, int n_steps, double clamp_tol) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");
    if (duration < 0.0) throw std::invalid_argument("duration must be non-negative");
    double x = clamp_state(x0, clamp_tol);
    const double h = duration / n_steps;
    for (int j = 1; j <= n_steps; ++j) {
        x = rk4_const(m, x, current, h, clamp_tol);
        x = settle(x, clamp_tol, h * j);
    }
    return x;
}

Trajectory integrate(const MemristorModel& m, const Waveform& w, const SimConfig& c) {
    validate_config(c);
    const double T = w.period();

    Trajectory tr;
    double x = clamp_state(c.x0, c.clamp_tol);

    if (const auto segs = segments(w)) {
        const int raw_per_period = static_cast<int>(segs->size()) * c.steps_per_segment;
        if (raw_per_period % c.record_stride != 0)
            throw std::invalid_argument("record_stride must divide the " +
                                        std::to_string(raw_per_period) +
                                        " sub-steps per period");
        std::vector<double> seg_offset(segs->size(), 0.0);
        for (std::size_t s = 1; s < segs->size(); ++s)
            seg_offset[s] = seg_offset[s - 1] + (*segs)[s - 1].duration;

        tr.times.reserve(1 + static_cast<std::size_t>(c.periods) * raw_per_period / c.record_stride);
        tr.states.reserve(tr.times.capacity());
        tr.times.push_back(0.0);
        tr.states.push_back(x);
        for (int k = 0; k < c.periods; ++k) {
            const double t0 = static_cast<double>(k) * T;
            int raw = 0;
            for (std::size_t s = 0; s < segs->size(); ++s) {
                const auto& seg = (*segs)[s];
                const double h = seg.duration / c.steps_per_segment;
                for (int j = 1; j <= c.steps_per_segment; ++j) {
                    const double t = t0 + seg_offset[s] + h * j;
                    x = rk4_const(m, x, seg.current, h, c.clamp_tol);
                    x = settle(x, c.clamp_tol, t);
                    if (++raw % c.record_stride == 0) {
                        tr.times.push_back(t);
                        tr.states.push_back(x);
                    }
                }
            }
        }
    } else {
        if (!(c.dt > 0.0))
            throw std::invalid_argument("dt must be positive for sinusoid/triangle drives");
        const double ratio = T / c.dt;
        const long n_per = std::lround(ratio);
        if (n_per < 1 || std::abs(ratio - static_cast<double>(n_per)) > 1e-6)
            throw std::invalid_argument("dt must divide the drive period");
        if (n_per % c.record_stride != 0)
            throw std::invalid_argument("record_stride must divide the " +
                                        std::to_string(n_per) + " steps per period");
        const double h = T / static_cast<double>(n_per);

        tr.times.reserve(1 + static_cast<std::size_t>(c.periods) * n_per / c.record_stride);
        tr.states.reserve(tr.times.capacity());
        tr.times.push_back(0.0);
        tr.states.push_back(x);
        for (int k = 0; k < c.periods; ++k) {
            const double t0 = static_cast<double>(k) * T;
            for (long j = 1; j <= n_per; ++j) {
                const double t = t0 + h * j;
                x = rk4_timed(m, w, x, t0 + h * (j - 1), h, c.clamp_tol);
                x = settle(x, c.clamp_tol, t);
                if (j % c.record_stride == 0) {
                    tr.times.push_back(t);
                    tr.states.push_back(x);
                }
            }
        }
    }

    tr.averaged = moving_average(tr, T);
    return tr;
}

std::vector<double> moving_average(const Trajectory& tr, double period) {
    if (tr.times.size() != tr.states.size())
        throw std::invalid_argument("trajectory times and states differ in length");
    const std::size_t s = samples_per_period(tr.times, period);

    std::vector<double> cum(tr.times.size(), 0.0);
    for (std::size_t k = 1; k < tr.times.size(); ++k)
        cum[k] = cum[k - 1] +
                 0.5 * (tr.states[k] + tr.states[k - 1]) * (tr.times[k] - tr.times[k - 1]);

    std::vector<double> avg(tr.times.size() - s);
    for (std::size_t j = 0; j + s < tr.times.size(); ++j)
        avg[j] = (cum[j + s] - cum[j]) / period;
    return avg;
}

LimitCycleReport detect_limit_cycle(const Trajectory& tr, double period, double eps) {
    if (tr.times.size() != tr.states.size())
        throw std::invalid_argument("trajectory times and states differ in length");
    const std::size_t s = samples_per_period(tr.times, period);
    if (tr.times.size() < 2 * s + 1)
        throw std::invalid_argument("record spans fewer than two periods");

    const std::size_t n = tr.states.size();
    double residual = 0.0;
    for (std::size_t k = 0; k <= s; ++k)
        residual = std::max(residual,
                            std::abs(tr.states[n - 1 - k] - tr.states[n - 1 - k - s]));
    return {residual < eps, residual};
}

}  // namespace memdyn
