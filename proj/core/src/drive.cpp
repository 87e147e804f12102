#include "memdyn/drive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace memdyn {

void validate(const PulseTrain& p) {
    if (!(p.period > 0.0)) throw std::invalid_argument("period must be positive");
    if (!(p.i_plus > 0.0)) throw std::invalid_argument("i_plus must be positive");
    if (!(p.i_minus < 0.0)) throw std::invalid_argument("i_minus must be negative");
    if (!(p.tau_plus > 0.0)) throw std::invalid_argument("tau_plus must be positive");
    if (!(p.tau_minus > 0.0)) throw std::invalid_argument("tau_minus must be positive");
    if (p.tau_plus + p.tau_minus > p.period)
        throw std::invalid_argument("tau_plus + tau_minus must not exceed the period");
}

double quiet_time(const PulseTrain& p) {
    validate(p);
    return p.period - p.tau_plus - p.tau_minus;
}

Waveform::Waveform(WaveKind kind, PulseTrain pulses, double amplitude, double period)
    : kind_(kind), pulses_(pulses), amplitude_(amplitude), period_(period) {}

Waveform Waveform::rectangular(const PulseTrain& pulses) {
    validate(pulses);
    return {WaveKind::Rectangular, pulses, 0.0, pulses.period};
}

Waveform Waveform::sinusoid(double i0, double period) {
    if (!(i0 > 0.0)) throw std::invalid_argument("i0 must be positive");
    if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
    return {WaveKind::Sinusoid, PulseTrain{}, i0, period};
}

Waveform Waveform::triangle(double i0, double period) {
    if (!(i0 > 0.0)) throw std::invalid_argument("i0 must be positive");
    if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
    return {WaveKind::Triangle, PulseTrain{}, i0, period};
}

double Waveform::amplitude() const {
    if (kind_ == WaveKind::Rectangular)
        throw std::logic_error("rectangular drives have no single amplitude");
    return amplitude_;
}

const PulseTrain& Waveform::pulses() const {
    if (kind_ != WaveKind::Rectangular)
        throw std::logic_error("only rectangular drives carry pulse parameters");
    return pulses_;
}

namespace {

// One pulse at the period start, the other starting at mid-period (pushed
// later if the first pulse runs past T/2, pulled earlier if it would not fit).
std::vector<Segment> pulse_segments(const PulseTrain& p) {
    const double T = p.period;
    const bool plus_first = p.layout == PulseLayout::PlusThenMinus;
    const double tau_a = plus_first ? p.tau_plus : p.tau_minus;
    const double i_a = plus_first ? p.i_plus : p.i_minus;
    const double tau_b = plus_first ? p.tau_minus : p.tau_plus;
    const double i_b = plus_first ? p.i_minus : p.i_plus;

    const double b_start = std::min(std::max(tau_a, 0.5 * T), T - tau_b);
    const double gap1 = std::max(0.0, b_start - tau_a);
    const double gap2 = std::max(0.0, T - b_start - tau_b);

    std::vector<Segment> out;
    const double eps = 1e-15 * T;
    auto push = [&](double duration, double current) {
        if (duration > eps) out.push_back({duration, current});
    };
    push(tau_a, i_a);
    push(gap1, 0.0);
    push(tau_b, i_b);
    push(gap2, 0.0);
    return out;
}

double fold_phase(double t, double period) {
    double u = t / period;
    u -= std::floor(u);
    return u;
}

}  // namespace

double sample(const Waveform& w, double t) {
    const double T = w.period();
    switch (w.kind()) {
    case WaveKind::Rectangular: {
        const double local = fold_phase(t, T) * T;
        double cursor = 0.0;
        const auto segs = pulse_segments(w.pulses());
        for (const auto& seg : segs) {
            cursor += seg.duration;
            if (local < cursor) return seg.current;
        }
        return segs.empty() ? 0.0 : segs.back().current;
    }
    case WaveKind::Sinusoid:
        return w.amplitude() * std::sin(2.0 * std::numbers::pi * fold_phase(t, T));
    case WaveKind::Triangle: {
        const double u = fold_phase(t, T);
        if (u < 0.25) return w.amplitude() * 4.0 * u;
        if (u < 0.75) return w.amplitude() * (2.0 - 4.0 * u);
        return w.amplitude() * (4.0 * u - 4.0);
    }
    }
    return 0.0;
}

std::optional<std::vector<Segment>> segments(const Waveform& w) {
    if (w.kind() != WaveKind::Rectangular) return std::nullopt;
    return pulse_segments(w.pulses());
}

}  // namespace memdyn
