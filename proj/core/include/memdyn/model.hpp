#pragma once

#include <optional>

#include "memdyn/activation.hpp"
#include "memdyn/window.hpp"

namespace memdyn {

/// First-order current-controlled device: the state moves as
/// f(x, I) = h(I) * g(x, I). An optional linear resistance map between
/// r_off (x = 0) and r_on (x = 1) provides a voltage read-out.
struct MemristorModel {
    WindowSpec window;
    Activation activation;
    std::optional<double> r_on;
    std::optional<double> r_off;
};

/// f(x, I) = h(I) * g(x, I). Exactly zero at I = 0.
double state_rate(const MemristorModel& m, double x, double current,
                  double clamp_tol = kDefaultClampTol);

/// R(x) = r_on * x + r_off * (1 - x). Requires both resistances configured
/// with r_off > r_on > 0; throws std::invalid_argument otherwise.
double memristance(const MemristorModel& m, double x);

/// V = R(x) * I.
double read_voltage(const MemristorModel& m, double x, double current);

}  // namespace memdyn
