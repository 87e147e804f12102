#include "memdyn/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace memdyn {

namespace {

void require_exponent(int p) {
    if (p < 1) throw std::invalid_argument("window exponent p must be a positive integer");
}

}  // namespace

double eval_joglekar(double x, int p, double clamp_tol) {
    require_exponent(p);
    const double xc = clamp_state(x, clamp_tol);
    return 1.0 - ipow(2.0 * xc - 1.0, 2 * p);
}

double eval_biolek(double x, double current, int p, double clamp_tol) {
    require_exponent(p);
    const double xc = clamp_state(x, clamp_tol);
    // H(-I): 1 for negative current, 0 otherwise. Zero current takes the
    // positive branch; the device equation forces f(x, 0) = 0 regardless.
    const double step = current < 0.0 ? 1.0 : 0.0;
    return 1.0 - ipow(xc - step, 2 * p);
}

WindowSpec::WindowSpec(WindowKind kind, int p, WindowFn fn)
    : kind_(kind), p_(p), custom_(std::move(fn)) {}

WindowSpec WindowSpec::joglekar(int p) {
    require_exponent(p);
    return {WindowKind::Joglekar, p, nullptr};
}

WindowSpec WindowSpec::biolek(int p) {
    require_exponent(p);
    return {WindowKind::Biolek, p, nullptr};
}

WindowSpec WindowSpec::custom(WindowFn eval) {
    if (!eval) throw std::invalid_argument("custom window requires an evaluator");
    return {WindowKind::Custom, 1, std::move(eval)};
}

double WindowSpec::eval(double x, double current, double clamp_tol) const {
    switch (kind_) {
    case WindowKind::Joglekar: return eval_joglekar(x, p_, clamp_tol);
    case WindowKind::Biolek: return eval_biolek(x, current, p_, clamp_tol);
    case WindowKind::Custom: return custom_(clamp_state(x, clamp_tol), current);
    }
    return 0.0;
}

WindowClass classify_window(const WindowSpec& w, int grid_n, double tol) {
    if (grid_n < 3) throw std::invalid_argument("grid_n must be at least 3");
    if (tol <= 0.0) throw std::invalid_argument("tol must be positive");

    const double i_pos = 1.0;
    const double i_neg = -1.0;
    std::vector<double> gp(grid_n), gn(grid_n);
    for (int k = 0; k < grid_n; ++k) {
        const double x = static_cast<double>(k) / (grid_n - 1);
        gp[k] = w.eval(x, i_pos);
        gn[k] = w.eval(x, i_neg);
    }

    double lo = gp[0], hi = gp[0];
    for (int k = 0; k < grid_n; ++k) {
        lo = std::min({lo, gp[k], gn[k]});
        hi = std::max({hi, gp[k], gn[k]});
    }
    const double span = hi - lo;

    // A continuous window sampled this densely cannot jump by a large
    // fraction of its range between neighbouring grid points.
    const double jump_tol = 0.1 * span + tol;
    double max_jump = 0.0;
    double max_current_gap = 0.0;
    bool pos_mono = true, neg_mono = true;
    for (int k = 0; k + 1 < grid_n; ++k) {
        max_jump = std::max({max_jump, std::abs(gp[k + 1] - gp[k]),
                             std::abs(gn[k + 1] - gn[k])});
        if (gp[k + 1] - gp[k] > tol) pos_mono = false;
        if (gn[k + 1] - gn[k] < -tol) neg_mono = false;
    }
    for (int k = 0; k < grid_n; ++k)
        max_current_gap = std::max(max_current_gap, std::abs(gp[k] - gn[k]));

    const bool continuous = max_jump <= jump_tol;
    const bool pos_bounds = std::abs(gp[0] - 1.0) <= tol && std::abs(gp[grid_n - 1]) <= tol;
    const bool neg_bounds = std::abs(gn[0]) <= tol && std::abs(gn[grid_n - 1] - 1.0) <= tol;
    const bool current_independent = max_current_gap <= tol;
    bool interior_positive = true;
    for (int k = 1; k + 1 < grid_n; ++k)
        if (gp[k] <= tol || gn[k] <= tol) interior_positive = false;

    WindowClass out;
    out.evidence = {
        {"continuous", continuous},
        {"positive_current_monotone_nonincreasing", pos_mono},
        {"positive_current_boundaries", pos_bounds},
        {"negative_current_monotone_nondecreasing", neg_mono},
        {"negative_current_boundaries", neg_bounds},
        {"current_independent", current_independent},
        {"interior_positive", interior_positive},
    };
    if (continuous && pos_mono && pos_bounds && neg_mono && neg_bounds)
        out.label = StructuralClass::Class1;
    else if (continuous && current_independent && interior_positive)
        out.label = StructuralClass::Class2;
    else
        out.label = StructuralClass::Unclassified;
    return out;
}

}  // namespace memdyn
