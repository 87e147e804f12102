#pragma once

#include <functional>
#include <string>
#include <vector>

#include "memdyn/numeric.hpp"

namespace memdyn {

enum class WindowKind { Joglekar, Biolek, Custom };

/// Evaluator signature for user-supplied windows: (state, current) -> value.
using WindowFn = std::function<double(double, double)>;

/// g_J(x) = 1 - (2x - 1)^(2p). Independent of the drive current.
double eval_joglekar(double x, int p, double clamp_tol = kDefaultClampTol);

/// g_B(x, I) = 1 - (x - H(-I))^(2p). Depends on the current only through its
/// sign: 1 - x^(2p) for I >= 0, 1 - (x - 1)^(2p) for I < 0.
double eval_biolek(double x, double current, int p, double clamp_tol = kDefaultClampTol);

/// A window shape plus its exponent. Immutable once built and safe to share
/// across threads.
class WindowSpec {
public:
    static WindowSpec joglekar(int p);
    static WindowSpec biolek(int p);
    static WindowSpec custom(WindowFn eval);

    [[nodiscard]] WindowKind kind() const { return kind_; }
    [[nodiscard]] int exponent() const { return p_; }

    /// Window value at (x, current). x may stray from [0, 1] by at most
    /// clamp_tol; anything further throws std::domain_error.
    [[nodiscard]] double eval(double x, double current,
                              double clamp_tol = kDefaultClampTol) const;

private:
    WindowSpec(WindowKind kind, int p, WindowFn fn);

    WindowKind kind_;
    int p_;
    WindowFn custom_;
};

enum class StructuralClass { Class1, Class2, Unclassified };

struct ConditionCheck {
    std::string condition;
    bool passed = false;
};

struct WindowClass {
    StructuralClass label = StructuralClass::Unclassified;
    std::vector<ConditionCheck> evidence;
};

/// Grid-based structural classification.
///
/// Class1: continuous in x and, for positive currents, monotone non-increasing
/// with g(0) = 1, g(1) = 0; for negative currents monotone non-decreasing with
/// g(0) = 0, g(1) = 1. Class2: continuous, independent of the current, and
/// strictly positive on the open interval. Anything else is Unclassified.
/// Monotonicity and boundary values are checked by finite differences on a
/// uniform grid with tolerance tol.
WindowClass classify_window(const WindowSpec& w, int grid_n = 1001, double tol = 1e-9);

}  // namespace memdyn
