#pragma once

#include <optional>
#include <vector>

namespace memdyn {

enum class PulseLayout { PlusThenMinus, MinusThenPlus };

/// Periodic alternating-polarity current pulse train: one positive pulse of
/// amplitude i_plus and duration tau_plus, one negative pulse of amplitude
/// i_minus and duration tau_minus per period, separated by quiet gaps.
struct PulseTrain {
    double i_plus = 0.05;
    double tau_plus = 0.2;
    double i_minus = -0.05;
    double tau_minus = 0.2;
    double period = 1.0;
    PulseLayout layout = PulseLayout::PlusThenMinus;
};

/// Throws std::invalid_argument when the train violates its sign or timing
/// constraints (i_plus > 0, i_minus < 0, tau_plus + tau_minus <= period, ...).
void validate(const PulseTrain& p);

/// Quiet time per period: period - tau_plus - tau_minus.
double quiet_time(const PulseTrain& p);

enum class WaveKind { Rectangular, Sinusoid, Triangle };

class Waveform {
public:
    static Waveform rectangular(const PulseTrain& pulses);
    static Waveform sinusoid(double i0, double period);
    static Waveform triangle(double i0, double period);

    [[nodiscard]] WaveKind kind() const { return kind_; }
    [[nodiscard]] double period() const { return period_; }

    /// Peak current of a sinusoid/triangle; throws for rectangular drives.
    [[nodiscard]] double amplitude() const;

    /// Pulse parameters of a rectangular drive; throws for other kinds.
    [[nodiscard]] const PulseTrain& pulses() const;

private:
    Waveform(WaveKind kind, PulseTrain pulses, double amplitude, double period);

    WaveKind kind_;
    PulseTrain pulses_;
    double amplitude_;
    double period_;
};

/// Drive current at time t >= 0; periodic with the waveform period.
double sample(const Waveform& w, double t);

struct Segment {
    double duration = 0.0;
    double current = 0.0;
};

/// Exact piecewise-constant decomposition of one period of a rectangular
/// drive; the durations sum to the period. Empty optional for sinusoid and
/// triangle drives, which are not piecewise-constant.
std::optional<std::vector<Segment>> segments(const Waveform& w);

}  // namespace memdyn
