#pragma once

#include <stdexcept>
#include <string>

namespace memdyn {

/// States slightly outside [0, 1] (integrator round-off) are clamped; anything
/// past this tolerance is treated as a genuine domain violation.
inline constexpr double kDefaultClampTol = 1e-12;

/// base^exp for integer exp >= 0, by repeated squaring.
constexpr double ipow(double base, int exp) {
    double out = 1.0;
    double b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

/// Returns x pinned to [0, 1]; throws std::domain_error when x strays from the
/// interval by more than clamp_tol.
inline double clamp_state(double x, double clamp_tol = kDefaultClampTol) {
    if (x >= 0.0 && x <= 1.0) return x;
    if (x < 0.0 && x >= -clamp_tol) return 0.0;
    if (x > 1.0 && x <= 1.0 + clamp_tol) return 1.0;
    throw std::domain_error("state x = " + std::to_string(x) +
                            " lies outside [0, 1] beyond the clamp tolerance");
}

}  // namespace memdyn
