#include "doctest.h"

#include <cstdlib>
#include <random>

#include "memdyn/csv.hpp"
#include "memdyn/serialize.hpp"

using namespace memdyn;

TEST_CASE("model JSON round trip preserves every field") {
    const MemristorModel m{WindowSpec::biolek(3), Activation::threshold(2.5, 0.4), 100.0,
                           16000.0};
    const auto back = parse_model_json(model_json(m));
    CHECK(back.window.kind() == WindowKind::Biolek);
    CHECK(back.window.exponent() == 3);
    CHECK(back.activation.kind() == ActivationKind::Threshold);
    CHECK(back.activation.gamma() == 2.5);
    CHECK(back.activation.i_threshold() == 0.4);
    CHECK(back.r_on == 100.0);
    CHECK(back.r_off == 16000.0);
}

TEST_CASE("the documented model schema parses") {
    const auto m = parse_model_json(
        R"({"window": {"kind": "biolek", "p": 1},
            "activation": {"kind": "linear", "gamma": 1.0},
            "r_on": null, "r_off": null})");
    CHECK(m.window.kind() == WindowKind::Biolek);
    CHECK(m.activation.kind() == ActivationKind::Linear);
    CHECK_FALSE(m.r_on.has_value());
    CHECK_FALSE(m.r_off.has_value());
}

TEST_CASE("model JSON errors name the offending key") {
    CHECK_THROWS_WITH_AS(
        parse_model_json(R"({"window": {"kind": "exotic"}, "activation": {"kind": "linear", "gamma": 1}})"),
        "window.kind must be \"joglekar\" or \"biolek\"", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_model_json(R"({"window": {"kind": "biolek"}, "activation": {"kind": "linear"}})"),
        "gamma must be a number", std::invalid_argument);
    CHECK_THROWS_AS(parse_model_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_model_json(
            R"({"window": {"kind": "biolek"}, "activation": {"kind": "linear", "gamma": 1}, "r_on": 200, "r_off": 100})"),
        std::invalid_argument);
}

TEST_CASE("drive JSON round trips both shapes") {
    PulseTrain p;
    p.i_plus = 0.7;
    p.tau_plus = 0.1;
    p.i_minus = -0.2;
    p.tau_minus = 0.3;
    p.period = 2.0;
    p.layout = PulseLayout::MinusThenPlus;
    const auto rect = parse_drive_json(drive_json(Waveform::rectangular(p)));
    CHECK(rect.kind() == WaveKind::Rectangular);
    CHECK(rect.pulses().i_plus == 0.7);
    CHECK(rect.pulses().tau_minus == 0.3);
    CHECK(rect.pulses().layout == PulseLayout::MinusThenPlus);
    CHECK(rect.period() == 2.0);

    const auto sin_w = parse_drive_json(drive_json(Waveform::sinusoid(0.05, 1.5)));
    CHECK(sin_w.kind() == WaveKind::Sinusoid);
    CHECK(sin_w.amplitude() == 0.05);
    CHECK(sin_w.period() == 1.5);

    CHECK_THROWS_AS(parse_drive_json(R"({"kind": "square", "i0": 1, "period": 1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_drive_json(R"({"kind": "rect", "i_plus": 1})"),
                    std::invalid_argument);
}

TEST_CASE("fixed point reports serialise with nullable location") {
    FixedPointReport stable{0.5, FixedPointKind::Stable, -0.02, 1e-14};
    CHECK(report_json(stable) ==
          R"({"kind":"stable","residual":1e-14,"stability_value":-0.02,"x_a":0.5})");
    FixedPointReport neutral{std::nullopt, FixedPointKind::Neutral, 0.0, 0.0};
    CHECK(report_json(neutral) ==
          R"({"kind":"neutral","residual":0.0,"stability_value":0.0,"x_a":null})");
}

TEST_CASE("CSV number formatting reparses to the exact double") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> xd(0.0, 1.0);
    std::uniform_real_distribution<double> ld(-20.0, 3.0);
    for (int k = 0; k < 500; ++k) {
        const double v = (k % 2) ? xd(rng) : xd(rng) * std::pow(10.0, ld(rng));
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(std::strtod(format_double(-0.02).c_str(), nullptr) == -0.02);
}

TEST_CASE("window classification serialises its evidence") {
    const auto text = window_class_json(classify_window(WindowSpec::joglekar(2)));
    CHECK(text.find("\"class\":\"class2\"") != std::string::npos);
    CHECK(text.find("\"condition\":\"continuous\"") != std::string::npos);
    CHECK(text.find("\"pass\":true") != std::string::npos);
}
