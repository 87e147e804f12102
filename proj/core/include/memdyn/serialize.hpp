#pragma once

#include <string>

#include "memdyn/attractor.hpp"
#include "memdyn/drive.hpp"
#include "memdyn/model.hpp"
#include "memdyn/window.hpp"

namespace memdyn {

// JSON text bindings for the externally visible objects. Parse errors and
// schema violations throw std::invalid_argument naming the offending key.

/// {"window": {"kind": "biolek", "p": 1},
///  "activation": {"kind": "linear", "gamma": 1.0},
///  "r_on": null, "r_off": null}
MemristorModel parse_model_json(const std::string& text);
std::string model_json(const MemristorModel& m);

/// {"kind": "rect", "i_plus": ..., "tau_plus": ..., "i_minus": ...,
///  "tau_minus": ..., "period": ..., "layout": "plus_then_minus"}
/// or {"kind": "sin"|"tri", "i0": ..., "period": ...}
Waveform parse_drive_json(const std::string& text);
std::string drive_json(const Waveform& w);

/// {"x_a": ...|null, "kind": "stable"|"neutral"|"none",
///  "stability_value": ..., "residual": ...}
std::string report_json(const FixedPointReport& r);

/// {"class": "class1"|"class2"|"unclassified",
///  "evidence": [{"condition": ..., "pass": ...}, ...]}
std::string window_class_json(const WindowClass& c);

}  // namespace memdyn
