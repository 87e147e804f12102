#pragma once

#include <cmath>
#include <stdexcept>

namespace memdyn {

enum class ActivationKind { Linear, Threshold, Quadratic };

/// Current-to-rate map h(I). Every kind satisfies h(0) = 0 and
/// sign(h(I)) = sign(I) whenever h(I) is nonzero.
class Activation {
public:
    /// h(I) = gamma * I.
    static Activation linear(double gamma) { return {ActivationKind::Linear, gamma, 0.0}; }

    /// h(I) = sign(I) * gamma * (|I| - i_threshold) above the threshold, 0 below.
    static Activation threshold(double gamma, double i_threshold) {
        if (i_threshold < 0.0) throw std::invalid_argument("i_threshold must be non-negative");
        return {ActivationKind::Threshold, gamma, i_threshold};
    }

    /// h(I) = sign(I) * gamma * I^2.
    static Activation quadratic(double gamma) { return {ActivationKind::Quadratic, gamma, 0.0}; }

    [[nodiscard]] ActivationKind kind() const { return kind_; }
    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double i_threshold() const { return i_threshold_; }

    [[nodiscard]] double rate(double current) const {
        switch (kind_) {
        case ActivationKind::Linear:
            return gamma_ * current;
        case ActivationKind::Threshold: {
            const double mag = std::abs(current);
            if (mag <= i_threshold_) return 0.0;
            return (current > 0.0 ? 1.0 : -1.0) * gamma_ * (mag - i_threshold_);
        }
        case ActivationKind::Quadratic:
            if (current == 0.0) return 0.0;
            return (current > 0.0 ? 1.0 : -1.0) * gamma_ * current * current;
        }
        return 0.0;
    }

private:
    Activation(ActivationKind kind, double gamma, double i_threshold)
        : kind_(kind), gamma_(gamma), i_threshold_(i_threshold) {
        if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    }

    ActivationKind kind_;
    double gamma_;
    double i_threshold_;
};

}  // namespace memdyn
