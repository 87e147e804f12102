// Acceptance suite: one pass/fail line per criterion. Exit code equals the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "memdyn/attractor.hpp"
#include "memdyn/simulate.hpp"

using namespace memdyn;

namespace {

constexpr std::size_t kSamplesPerPeriod = 64;  // 4 segments x 16 sub-steps

MemristorModel biolek_linear(int p = 1, double gamma = 1.0) {
    return {WindowSpec::biolek(p), Activation::linear(gamma), {}, {}};
}

MemristorModel joglekar_linear(int p = 1, double gamma = 1.0) {
    return {WindowSpec::joglekar(p), Activation::linear(gamma), {}, {}};
}

// Reference pulse train: gamma i_plus tau_plus = 0.01, tau = 0.2 T, symmetric.
PulseTrain reference_train() { return PulseTrain{}; }

double biolek_exact(double x0, double c) { return std::tanh(c + std::atanh(x0)); }
double joglekar_exact(double x0, double c) {
    const double u0 = 2.0 * x0 - 1.0;
    return 0.5 * (1.0 + std::tanh(2.0 * c + std::atanh(u0)));
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// --------------------------------------------------------------------------
// 1. Symmetric-pulse convergence of the averaged state to 1/2 from a fan of
//    initial conditions, monotone after the first ten periods.
// --------------------------------------------------------------------------
bool criterion_fan_convergence(std::string& detail) {
    const auto m = biolek_linear();
    const auto w = Waveform::rectangular(reference_train());
    double worst_final = 0.0;
    double worst_increase = -1.0;
    for (double x0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        SimConfig cfg;
        cfg.x0 = x0;
        cfg.periods = 601;
        const auto tr = integrate(m, w, cfg);
        worst_final = std::max(worst_final,
                               std::abs(tr.averaged[600 * kSamplesPerPeriod] - 0.5));
        double prev = std::abs(tr.averaged[10 * kSamplesPerPeriod] - 0.5);
        for (int k = 11; k <= 600; ++k) {
            const double e = std::abs(tr.averaged[k * kSamplesPerPeriod] - 0.5);
            worst_increase = std::max(worst_increase, e - prev);
            prev = e;
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "max final |xbar-0.5| = %.3e, worst per-period increase = %.3e",
                  worst_final, worst_increase);
    detail = buf;
    return worst_final < 1e-3 && worst_increase <= 1e-12;
}

// --------------------------------------------------------------------------
// 2. Balanced-pulse neutral equilibrium: identically zero averaged rate,
//    bounded averaged drift over 100 periods, and a second-order (about 4x)
//    reduction of that drift when the rate constant is halved.
// --------------------------------------------------------------------------
bool criterion_neutral_drift(std::string& detail) {
    const auto w = Waveform::rectangular(reference_train());

    const auto report = find_fixed_point(joglekar_linear(), w);
    const bool neutral = report.kind == FixedPointKind::Neutral;

    auto drift_100 = [&](double gamma) {
        SimConfig cfg;
        cfg.x0 = 0.3;
        cfg.periods = 101;
        const auto tr = integrate(joglekar_linear(1, gamma), w, cfg);
        return std::abs(tr.averaged[100 * kSamplesPerPeriod] - tr.averaged[0]);
    };
    const double d_full = drift_100(1.0);
    const double d_half = drift_100(0.5);
    const double ratio = d_full / d_half;
    const bool bounded = d_full < 5e-2;
    const bool second_order = ratio >= 3.5 && ratio <= 4.5;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "neutral=%d, drift(gamma)=%.3e, drift(gamma/2)=%.3e, ratio=%.3g",
                  neutral ? 1 : 0, d_full, d_half, ratio);
    detail = buf;
    return neutral && bounded && second_order;
}

// --------------------------------------------------------------------------
// 3. Closed-form attractor location against the bisection solver over
//    log-spaced strength ratios.
// --------------------------------------------------------------------------
bool criterion_closed_form(std::string& detail) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double mag =
            std::exp(std::log(0.01) + (std::log(100.0) - std::log(0.01)) * k / 99.0);
        const double alpha = -mag;
        const double via_bisection = biolek_fixed_point_general(1, {mag, -1.0});
        worst = std::max(worst, std::abs(biolek_xa_closed_form(alpha) - via_bisection));
    }
    const bool exact_half = biolek_xa_closed_form(-1.0) == 0.5;
    const double ref = std::abs(biolek_xa_closed_form(-0.5) - (2.0 - std::sqrt(3.0)));
    char buf[120];
    std::snprintf(buf, sizeof buf, "max |closed - bisect| = %.3e, |xa(-0.5) - (2-sqrt3)| = %.3e",
                  worst, ref);
    detail = buf;
    return worst < 1e-9 && exact_half && ref < 1e-12;
}

// --------------------------------------------------------------------------
// 4. Reflection symmetry of the attractor sweep grid.
// --------------------------------------------------------------------------
bool criterion_sweep_symmetry(std::string& detail) {
    const auto grid = sweep_xa({0.2, 10.0, 51}, {-10.0, -0.2, 51}, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.a_plus.size(); ++i) {
        for (std::size_t j = 0; j < grid.a_minus.size(); ++j) {
            const double mirrored =
                biolek_fixed_point_general(1, {-grid.a_minus[j], -grid.a_plus[i]});
            worst = std::max(worst, std::abs(*grid.at(i, j) - (1.0 - mirrored)));
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "max |x_a(A,B) - (1 - x_a(-B,-A))| = %.3e", worst);
    detail = buf;
    return worst < 1e-9;
}

// --------------------------------------------------------------------------
// 5. Section steepness grows with the exponent and spans the state range.
// --------------------------------------------------------------------------
bool criterion_section_steepness(std::string& detail) {
    double prev_slope = 0.0;
    bool slopes_increase = true;
    bool spans = true;
    std::string slopes;
    for (int p : {1, 2, 5, 10}) {
        const auto line = sweep_section(p, 100);
        double lo = 1.0, hi = 0.0;
        for (const auto& pt : line) {
            lo = std::min(lo, pt.x_a);
            hi = std::max(hi, pt.x_a);
        }
        if (!(lo < 0.05 && hi > 0.95)) spans = false;

        const double d = 0.01;
        const double slope = (biolek_fixed_point_general(p, {5.0 + d, 5.0 + d - 10.0}) -
                              biolek_fixed_point_general(p, {5.0 - d, 5.0 - d - 10.0})) /
                             (2.0 * d);
        if (slope <= prev_slope) slopes_increase = false;
        prev_slope = slope;
        slopes += (slopes.empty() ? "" : ", ") + std::to_string(slope);
    }
    detail = "slopes at the 0.5 crossing: " + slopes;
    return slopes_increase && spans;
}

// --------------------------------------------------------------------------
// 6. Theorem suites over randomised drives: class-1 windows always give one
//    stable point, class-2 windows never do.
// --------------------------------------------------------------------------
bool criterion_theorem_suites(std::string& detail) {
    std::mt19937 rng(20240917);
    std::uniform_real_distribution<double> amp(0.2, 2.0);
    std::uniform_real_distribution<double> tau(0.05, 0.45);
    std::uniform_real_distribution<double> gam(0.1, 1.0);
    const int ps[] = {1, 2, 3, 10};

    int stable_ok = 0, class2_ok = 0;
    for (int k = 0; k < 50; ++k) {
        PulseTrain p;
        p.i_plus = amp(rng);
        p.i_minus = -amp(rng);
        p.tau_plus = tau(rng);
        p.tau_minus = tau(rng);
        const double g = gam(rng);
        const Activation act =
            (k % 3 == 0) ? Activation::linear(g)
                         : (k % 3 == 1 ? Activation::threshold(
                                             g, 0.5 * std::min(p.i_plus, -p.i_minus))
                                       : Activation::quadratic(g));
        const MemristorModel m1{WindowSpec::biolek(ps[k % 4]), act, {}, {}};
        const auto w = Waveform::rectangular(p);
        const auto report = find_fixed_point(m1, w);

        int crossings = 0;
        double prev = averaged_rhs(m1, w, 0.0);
        for (int i = 1; i <= 4096; ++i) {
            const double cur = averaged_rhs(m1, w, static_cast<double>(i) / 4096);
            if (prev * cur < 0.0) ++crossings;
            prev = cur;
        }
        if (report.kind == FixedPointKind::Stable && report.stability_value < 0.0 &&
            crossings == 1)
            ++stable_ok;

        // class-2 counterpart with exactly balanced strengths, then skewed
        const auto m2 = joglekar_linear(ps[(k + 1) % 4], g);
        PulseTrain q;
        q.i_plus = amp(rng);
        q.tau_plus = tau(rng);
        q.tau_minus = tau(rng);
        q.i_minus = -q.i_plus * q.tau_plus / q.tau_minus;
        const auto balanced = find_fixed_point(m2, Waveform::rectangular(q));
        q.i_minus *= 1.02;
        const auto skewed = find_fixed_point(m2, Waveform::rectangular(q));
        if (balanced.kind == FixedPointKind::Neutral && skewed.kind == FixedPointKind::None)
            ++class2_ok;
    }
    detail = "class1 stable " + std::to_string(stable_ok) + "/50, class2 behaviour " +
             std::to_string(class2_ok) + "/50";
    return stable_ok == 50 && class2_ok == 50;
}

// --------------------------------------------------------------------------
// 7. Rectangular, sinusoidal and triangular drives share the midpoint
//    attractor and settle into limit cycles.
// --------------------------------------------------------------------------
bool criterion_drive_shapes(std::string& detail) {
    const auto m = biolek_linear();
    const Waveform drives[] = {Waveform::rectangular(reference_train()),
                               Waveform::sinusoid(0.05, 1.0), Waveform::triangle(0.05, 1.0)};
    double worst_offset = 0.0, worst_residual = 0.0;
    bool all_periodic = true;
    for (const auto& w : drives) {
        SimConfig cfg;
        cfg.x0 = 0.1;
        cfg.periods = 601;
        cfg.dt = 1.0 / 256;
        const auto tr = integrate(m, w, cfg);
        worst_offset = std::max(worst_offset, std::abs(tr.averaged.back() - 0.5));
        const auto lc = detect_limit_cycle(tr, 1.0, 1e-6);
        worst_residual = std::max(worst_residual, lc.residual);
        all_periodic = all_periodic && lc.periodic;
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "max |xbar - 0.5| = %.3e, max cycle residual = %.3e",
                  worst_offset, worst_residual);
    detail = buf;
    return worst_offset < 5e-3 && all_periodic && worst_residual < 1e-6;
}

// --------------------------------------------------------------------------
// 8. Segment integrator against the tanh closed forms, with fourth-order
//    step convergence.
// --------------------------------------------------------------------------
bool criterion_integrator_oracle(std::string& detail) {
    const double x0 = 0.3;
    const double c = 0.25;  // accumulated strength of the test segment

    const double eb16 = std::abs(integrate_segment(biolek_linear(), x0, 1.0, c, 16) -
                                 biolek_exact(x0, c));
    const double eb32 = std::abs(integrate_segment(biolek_linear(), x0, 1.0, c, 32) -
                                 biolek_exact(x0, c));
    const double ej16 = std::abs(integrate_segment(joglekar_linear(), x0, 1.0, c, 16) -
                                 joglekar_exact(x0, c));
    const double ej32 = std::abs(integrate_segment(joglekar_linear(), x0, 1.0, c, 32) -
                                 joglekar_exact(x0, c));
    const double rb = eb16 / eb32;
    const double rj = ej16 / ej32;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "biolek err16=%.3e ratio=%.1f, joglekar err16=%.3e ratio=%.1f", eb16, rb,
                  ej16, rj);
    detail = buf;
    return eb16 < 1e-8 && ej16 < 1e-8 && rb >= 12.0 && rb <= 20.0 && rj >= 12.0 && rj <= 20.0;
}

// --------------------------------------------------------------------------
// 9. Numeric potential against the closed forms; its argmin against the
//    fixed-point solver; monotone class-2 potential when unbalanced.
// --------------------------------------------------------------------------
bool criterion_potential_consistency(std::string& detail) {
    PulseTrain p;
    p.i_plus = 5.0;   // strengths (1, -2): attractor at 2 - sqrt(3)
    p.i_minus = -10.0;
    const auto m = biolek_linear();
    const auto w = Waveform::rectangular(p);
    const auto curve = potential(m, w, 10001);
    if (!curve.u_closed_form) {
        detail = "closed form column missing";
        return false;
    }
    double worst = 0.0;
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < curve.x.size(); ++k) {
        worst = std::max(worst, std::abs(curve.u_numeric[k] - (*curve.u_closed_form)[k]));
        if (curve.u_numeric[k] < curve.u_numeric[argmin]) argmin = k;
    }
    const auto report = find_fixed_point(m, w);
    const double argmin_gap = std::abs(curve.x[argmin] - *report.x_a);

    PulseTrain q;
    q.tau_minus = 0.1;  // unbalanced class-2 bracket
    const auto uj = potential(joglekar_linear(), Waveform::rectangular(q), 10001);
    double worst_j = 0.0;
    bool monotone = true;
    for (std::size_t k = 1; k < uj.x.size(); ++k) {
        worst_j = std::max(worst_j, std::abs(uj.u_numeric[k] - (*uj.u_closed_form)[k]));
        if (uj.u_numeric[k] - uj.u_numeric[k - 1] > 1e-15) monotone = false;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max |U_num - U_closed| = %.3e, argmin gap = %.3e, U_J monotone = %d",
                  std::max(worst, worst_j), argmin_gap, monotone ? 1 : 0);
    detail = buf;
    return worst < 1e-8 && worst_j < 1e-8 && argmin_gap <= 1e-4 + 1e-12 && monotone;
}

// --------------------------------------------------------------------------
// 10. Universality across activations at matched strength ratio, and the
//     drive-shape gap under a quadratic activation.
// --------------------------------------------------------------------------
bool criterion_universality(std::string& detail) {
    PulseTrain pl;
    pl.i_plus = 2.0;
    pl.i_minus = -1.0;
    const auto lin = find_fixed_point(biolek_linear(), Waveform::rectangular(pl));

    const MemristorModel thr{WindowSpec::biolek(1), Activation::threshold(3.0, 0.5), {}, {}};
    PulseTrain pt;
    pt.i_plus = 1.5;
    pt.i_minus = -1.0;
    const auto th = find_fixed_point(thr, Waveform::rectangular(pt));
    const double pair_gap = std::abs(*lin.x_a - *th.x_a);

    const MemristorModel quad{WindowSpec::biolek(1), Activation::quadratic(0.05), {}, {}};
    PulseTrain pq;
    pq.i_plus = 1.0;
    pq.tau_plus = 0.2;
    pq.i_minus = -0.5;
    pq.tau_minus = 0.4;
    const auto rect = find_fixed_point(quad, Waveform::rectangular(pq));
    const auto sine = find_fixed_point(quad, Waveform::sinusoid(1.0, 1.0));
    const double gap = std::abs(*rect.x_a - *sine.x_a);
    // quadrature-oracle value: strengths ratio -2 against the symmetric midpoint
    const double expected_gap = (std::sqrt(3.0) - 1.0) - 0.5;

    char buf[160];
    std::snprintf(buf, sizeof buf, "activation pair gap = %.3e, drive-shape gap = %.9f", pair_gap,
                  gap);
    detail = buf;
    return pair_gap < 1e-9 && gap > 1e-3 && std::abs(gap - expected_gap) < 1e-6;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"symmetric-pulse fan converges to 1/2", criterion_fan_convergence},
        {"balanced pulses are neutral with second-order drift", criterion_neutral_drift},
        {"closed-form location matches bisection", criterion_closed_form},
        {"sweep grid reflection symmetry", criterion_sweep_symmetry},
        {"section steepness grows with the exponent", criterion_section_steepness},
        {"theorem suites over randomised drives", criterion_theorem_suites},
        {"drive shapes share the midpoint attractor", criterion_drive_shapes},
        {"segment integrator matches the closed forms", criterion_integrator_oracle},
        {"potential curve consistency", criterion_potential_consistency},
        {"universality and drive-shape gap", criterion_universality},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[k].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %2zu. %s  (%s)\n", ok ? "PASS" : "FAIL", k + 1,
                    criteria[k].name.c_str(), detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
