#include "memdyn/serialize.hpp"

#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace memdyn {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(key + " must be a number");
    return j[key].get<double>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(key + " must be a string");
    return j[key].get<std::string>();
}

std::optional<double> optional_number(const json& j, const std::string& key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_number()) throw std::invalid_argument(key + " must be a number or null");
    return j[key].get<double>();
}

WindowSpec parse_window(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("window must be an object");
    const std::string kind = require_string(j, "kind");
    const int p = j.contains("p") ? j["p"].get<int>() : 1;
    if (kind == "joglekar") return WindowSpec::joglekar(p);
    if (kind == "biolek") return WindowSpec::biolek(p);
    throw std::invalid_argument("window.kind must be \"joglekar\" or \"biolek\"");
}

Activation parse_activation(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("activation must be an object");
    const std::string kind = require_string(j, "kind");
    const double gamma = require_number(j, "gamma");
    if (kind == "linear") return Activation::linear(gamma);
    if (kind == "quadratic") return Activation::quadratic(gamma);
    if (kind == "threshold") return Activation::threshold(gamma, require_number(j, "i_t"));
    throw std::invalid_argument(
        "activation.kind must be \"linear\", \"threshold\" or \"quadratic\"");
}

json window_to_json(const WindowSpec& w) {
    json j;
    switch (w.kind()) {
    case WindowKind::Joglekar: j["kind"] = "joglekar"; break;
    case WindowKind::Biolek: j["kind"] = "biolek"; break;
    case WindowKind::Custom:
        throw std::invalid_argument("custom windows have no JSON form");
    }
    j["p"] = w.exponent();
    return j;
}

json activation_to_json(const Activation& a) {
    json j;
    switch (a.kind()) {
    case ActivationKind::Linear: j["kind"] = "linear"; break;
    case ActivationKind::Threshold:
        j["kind"] = "threshold";
        j["i_t"] = a.i_threshold();
        break;
    case ActivationKind::Quadratic: j["kind"] = "quadratic"; break;
    }
    j["gamma"] = a.gamma();
    return j;
}

}  // namespace

MemristorModel parse_model_json(const std::string& text) {
    const json j = parse_text(text, "model JSON");
    if (!j.is_object()) throw std::invalid_argument("model JSON must be an object");
    if (!j.contains("window")) throw std::invalid_argument("window is required");
    if (!j.contains("activation")) throw std::invalid_argument("activation is required");
    MemristorModel m{parse_window(j["window"]), parse_activation(j["activation"]),
                     optional_number(j, "r_on"), optional_number(j, "r_off")};
    if (m.r_on && !(*m.r_on > 0.0)) throw std::invalid_argument("r_on must be positive");
    if (m.r_on && m.r_off && !(*m.r_off > *m.r_on))
        throw std::invalid_argument("r_off must exceed r_on");
    return m;
}

std::string model_json(const MemristorModel& m) {
    json j;
    j["window"] = window_to_json(m.window);
    j["activation"] = activation_to_json(m.activation);
    j["r_on"] = m.r_on ? json(*m.r_on) : json(nullptr);
    j["r_off"] = m.r_off ? json(*m.r_off) : json(nullptr);
    return j.dump();
}

Waveform parse_drive_json(const std::string& text) {
    const json j = parse_text(text, "drive JSON");
    if (!j.is_object()) throw std::invalid_argument("drive JSON must be an object");
    const std::string kind = require_string(j, "kind");
    if (kind == "rect") {
        PulseTrain p;
        p.i_plus = require_number(j, "i_plus");
        p.tau_plus = require_number(j, "tau_plus");
        p.i_minus = require_number(j, "i_minus");
        p.tau_minus = require_number(j, "tau_minus");
        p.period = require_number(j, "period");
        if (j.contains("layout")) {
            const std::string layout = require_string(j, "layout");
            if (layout == "plus_then_minus")
                p.layout = PulseLayout::PlusThenMinus;
            else if (layout == "minus_then_plus")
                p.layout = PulseLayout::MinusThenPlus;
            else
                throw std::invalid_argument(
                    "layout must be \"plus_then_minus\" or \"minus_then_plus\"");
        }
        return Waveform::rectangular(p);
    }
    if (kind == "sin") return Waveform::sinusoid(require_number(j, "i0"), require_number(j, "period"));
    if (kind == "tri") return Waveform::triangle(require_number(j, "i0"), require_number(j, "period"));
    throw std::invalid_argument("kind must be \"rect\", \"sin\" or \"tri\"");
}

std::string drive_json(const Waveform& w) {
    json j;
    switch (w.kind()) {
    case WaveKind::Rectangular: {
        const auto& p = w.pulses();
        j["kind"] = "rect";
        j["i_plus"] = p.i_plus;
        j["tau_plus"] = p.tau_plus;
        j["i_minus"] = p.i_minus;
        j["tau_minus"] = p.tau_minus;
        j["period"] = p.period;
        j["layout"] = p.layout == PulseLayout::PlusThenMinus ? "plus_then_minus"
                                                             : "minus_then_plus";
        break;
    }
    case WaveKind::Sinusoid:
        j["kind"] = "sin";
        j["i0"] = w.amplitude();
        j["period"] = w.period();
        break;
    case WaveKind::Triangle:
        j["kind"] = "tri";
        j["i0"] = w.amplitude();
        j["period"] = w.period();
        break;
    }
    return j.dump();
}

std::string report_json(const FixedPointReport& r) {
    json j;
    j["x_a"] = r.x_a ? json(*r.x_a) : json(nullptr);
    switch (r.kind) {
    case FixedPointKind::Stable: j["kind"] = "stable"; break;
    case FixedPointKind::Neutral: j["kind"] = "neutral"; break;
    case FixedPointKind::None: j["kind"] = "none"; break;
    }
    j["stability_value"] = r.stability_value;
    j["residual"] = r.residual;
    return j.dump();
}

std::string window_class_json(const WindowClass& c) {
    json j;
    switch (c.label) {
    case StructuralClass::Class1: j["class"] = "class1"; break;
    case StructuralClass::Class2: j["class"] = "class2"; break;
    case StructuralClass::Unclassified: j["class"] = "unclassified"; break;
    }
    j["evidence"] = json::array();
    for (const auto& check : c.evidence)
        j["evidence"].push_back({{"condition", check.condition}, {"pass", check.passed}});
    return j.dump();
}

}  // namespace memdyn
