#include "memdyn/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "memdyn/numeric.hpp"

namespace memdyn {

namespace {

constexpr int kScanCells = 1024;
constexpr int kQuadPanelsPerHalf = 256;
constexpr double kStabilityFdStep = 1e-6;
constexpr double kNeutralRelTol = 1e-12;

template <typename F>
double bisect(F&& f, double lo, double hi, double f_lo, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return sum * h / 3.0;
}

}  // namespace

PulseStrengths pulse_strengths(const MemristorModel& m, const PulseTrain& p) {
    validate(p);
    const double ap = m.activation.rate(p.i_plus) * p.tau_plus;
    const double am = m.activation.rate(p.i_minus) * p.tau_minus;
    if (!(ap > 0.0) || !(am < 0.0))
        throw std::invalid_argument(
            "drive has a single active polarity: need h(i_plus) > 0 and h(i_minus) < 0");
    return {ap, am};
}

double averaged_rhs(const MemristorModel& m, const Waveform& w, double x) {
    const double T = w.period();
    const double xc = clamp_state(x);
    if (const auto segs = segments(w)) {
        double acc = 0.0;
        for (const auto& seg : *segs)
            if (seg.current != 0.0) acc += state_rate(m, xc, seg.current) * seg.duration;
        return acc / T;
    }
    // Split at the half-period so each quadrature panel sees one current sign.
    const auto f = [&](double t) { return state_rate(m, xc, sample(w, t)); };
    return (simpson(f, 0.0, 0.5 * T, kQuadPanelsPerHalf) +
            simpson(f, 0.5 * T, T, kQuadPanelsPerHalf)) /
           T;
}

FixedPointReport find_fixed_point(const MemristorModel& m, const Waveform& w, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const double T = w.period();

    // Magnitude of one period's worth of drive, for the scale-relative zero
    // test; also rejects drives with a single active polarity.
    double scale = 0.0;
    if (w.kind() == WaveKind::Rectangular) {
        const auto s = pulse_strengths(m, w.pulses());
        scale = std::max(s.a_plus, -s.a_minus) / T;
    } else {
        double h_max = 0.0, h_min = 0.0;
        for (int k = 0; k <= kScanCells; ++k) {
            const double h = m.activation.rate(sample(w, T * k / kScanCells));
            h_max = std::max(h_max, h);
            h_min = std::min(h_min, h);
        }
        if (!(h_max > 0.0) || !(h_min < 0.0))
            throw std::invalid_argument(
                "drive has a single active polarity: need h(I(t)) to take both signs");
        scale = 0.5 * std::max(h_max, -h_min);
    }

    const auto rhs = [&](double x) { return averaged_rhs(m, w, x); };

    std::vector<double> xs(kScanCells + 1), r(kScanCells + 1);
    double max_abs = 0.0;
    for (int k = 0; k <= kScanCells; ++k) {
        xs[k] = static_cast<double>(k) / kScanCells;
        r[k] = rhs(xs[k]);
        max_abs = std::max(max_abs, std::abs(r[k]));
    }

    if (max_abs <= kNeutralRelTol * scale)
        return {std::nullopt, FixedPointKind::Neutral, 0.0, max_abs * T};

    std::vector<double> roots;
    for (int k = 1; k < kScanCells; ++k)
        if (r[k] == 0.0) roots.push_back(xs[k]);
    for (int k = 0; k < kScanCells; ++k)
        if (r[k] * r[k + 1] < 0.0)
            roots.push_back(bisect(rhs, xs[k], xs[k + 1], r[k], tol));
    std::sort(roots.begin(), roots.end());

    for (const double root : roots) {
        const double d = std::min({kStabilityFdStep, 0.5 * root, 0.5 * (1.0 - root)});
        const double stability = T * (rhs(root + d) - rhs(root - d)) / (2.0 * d);
        if (stability < 0.0)
            return {root, FixedPointKind::Stable, stability, std::abs(T * rhs(root))};
    }
    return {std::nullopt, FixedPointKind::None, 0.0, 0.0};
}

double biolek_xa_closed_form(double alpha) {
    if (!(alpha < 0.0)) throw std::domain_error("alpha must be negative");
    // Rationalised form of (1 - sqrt(alpha^2 + alpha + 1)) / (alpha + 1);
    // finite at alpha = -1 where it evaluates to exactly 1/2.
    return -alpha / (1.0 + std::sqrt(alpha * (alpha + 1.0) + 1.0));
}

double biolek_fixed_point_general(int p, const PulseStrengths& s, double tol) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    if (!(s.a_plus > 0.0) || !(s.a_minus < 0.0))
        throw std::invalid_argument("strengths require a_plus > 0 and a_minus < 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const auto f = [&](double x) {
        return s.a_plus * (1.0 - ipow(x, 2 * p)) + s.a_minus * (1.0 - ipow(x - 1.0, 2 * p));
    };
    // f(0) = a_plus > 0, f(1) = a_minus < 0, and f is strictly decreasing.
    return bisect(f, 0.0, 1.0, s.a_plus, tol);
}

PotentialCurve potential(const MemristorModel& m, const Waveform& w, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
    const double T = w.period();
    const auto bracket = [&](double x) { return T * averaged_rhs(m, w, x); };

    PotentialCurve out;
    out.x.resize(grid_n);
    out.u_numeric.resize(grid_n);
    out.x[0] = 0.0;
    out.u_numeric[0] = 0.0;
    // Cumulative cell-wise Simpson rule keeps the quadrature error far below
    // the closed-form comparison tolerances.
    double u = 0.0;
    double f_lo = bracket(0.0);
    for (int k = 1; k < grid_n; ++k) {
        const double x_lo = static_cast<double>(k - 1) / (grid_n - 1);
        const double x_hi = static_cast<double>(k) / (grid_n - 1);
        const double f_hi = bracket(x_hi);
        const double f_mid = bracket(0.5 * (x_lo + x_hi));
        u -= (x_hi - x_lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
        out.x[k] = x_hi;
        out.u_numeric[k] = u;
        f_lo = f_hi;
    }

    const WindowKind wk = m.window.kind();
    if (w.kind() == WaveKind::Rectangular &&
        (wk == WindowKind::Joglekar || wk == WindowKind::Biolek)) {
        const auto& pt = w.pulses();
        const double ap = m.activation.rate(pt.i_plus) * pt.tau_plus;
        const double am = m.activation.rate(pt.i_minus) * pt.tau_minus;
        const int p = m.window.exponent();
        const int q = 2 * p + 1;
        std::vector<double> closed(grid_n);
        if (wk == WindowKind::Biolek) {
            const double u0 = -am / q;
            for (int k = 0; k < grid_n; ++k) {
                const double x = out.x[k];
                closed[k] = -ap * (x - ipow(x, q) / q) - am * (x - ipow(x - 1.0, q) / q) - u0;
            }
        } else {
            const double u0 = -(ap + am) / (2.0 * q);
            for (int k = 0; k < grid_n; ++k) {
                const double x = out.x[k];
                closed[k] = -(ap + am) * (x - ipow(2.0 * x - 1.0, q) / (2.0 * q)) - u0;
            }
        }
        out.u_closed_form = std::move(closed);
    }
    return out;
}

namespace {

std::vector<double> axis_values(const SweepAxis& axis) {
    if (axis.count < 1) throw std::invalid_argument("axis count must be at least 1");
    std::vector<double> vals(axis.count);
    if (axis.count == 1) {
        vals[0] = axis.lo;
        return vals;
    }
    for (int k = 0; k < axis.count; ++k)
        vals[k] = axis.lo + (axis.hi - axis.lo) * k / (axis.count - 1);
    return vals;
}

}  // namespace

SweepGrid sweep_xa(const SweepAxis& plus_axis, const SweepAxis& minus_axis, int p,
                   double tol) {
    SweepGrid grid;
    grid.a_plus = axis_values(plus_axis);
    grid.a_minus = axis_values(minus_axis);
    grid.x_a.resize(grid.a_plus.size() * grid.a_minus.size());
    for (std::size_t i = 0; i < grid.a_plus.size(); ++i) {
        for (std::size_t j = 0; j < grid.a_minus.size(); ++j) {
            auto& cell = grid.x_a[i * grid.a_minus.size() + j];
            const double ap = grid.a_plus[i];
            const double am = grid.a_minus[j];
            if (ap > 0.0 && am < 0.0)
                cell = biolek_fixed_point_general(p, {ap, am}, tol);
            else
                cell = std::nullopt;
        }
    }
    return grid;
}

std::vector<SectionPoint> sweep_section(int p, int n_points, double offset, double tol) {
    if (n_points < 2) throw std::invalid_argument("n_points must be at least 2");
    if (!(offset < 0.0)) throw std::invalid_argument("offset must be negative");
    std::vector<SectionPoint> out;
    out.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
        const double ap = -offset * (k + 0.5) / n_points;
        const double am = ap + offset;
        out.push_back({ap, am, biolek_fixed_point_general(p, {ap, am}, tol)});
    }
    return out;
}

}  // namespace memdyn
