#include "memdyn/model.hpp"

#include <stdexcept>

namespace memdyn {

double state_rate(const MemristorModel& m, double x, double current, double clamp_tol) {
    if (current == 0.0) return 0.0;
    const double h = m.activation.rate(current);
    if (h == 0.0) return 0.0;
    return h * m.window.eval(x, current, clamp_tol);
}

double memristance(const MemristorModel& m, double x) {
    if (!m.r_on || !m.r_off)
        throw std::invalid_argument("memristance requires r_on and r_off to be configured");
    if (!(*m.r_on > 0.0)) throw std::invalid_argument("r_on must be positive");
    if (!(*m.r_off > *m.r_on)) throw std::invalid_argument("r_off must exceed r_on");
    const double xc = clamp_state(x);
    return *m.r_on * xc + *m.r_off * (1.0 - xc);
}

double read_voltage(const MemristorModel& m, double x, double current) {
    return memristance(m, x) * current;
}

}  // namespace memdyn
