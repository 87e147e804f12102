// memdyn command line front-end: simulation, attractor analysis, parameter
// sweeps, potential curves and window classification, emitting CSV/JSON for
// external plotting. Exit codes: 0 success, 2 validation error, 3 numerical
// failure.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "memdyn/attractor.hpp"
#include "memdyn/csv.hpp"
#include "memdyn/drive.hpp"
#include "memdyn/errors.hpp"
#include "memdyn/model.hpp"
#include "memdyn/serialize.hpp"
#include "memdyn/simulate.hpp"
#include "memdyn/window.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ============================================================================
// Option bundles
// ============================================================================

struct ModelOpts {
    std::string model_file;
    std::string window = "biolek";
    int p = 1;
    std::string activation = "linear";
    double gamma = 1.0;
    double i_threshold = 0.0;
    std::optional<double> r_on;
    std::optional<double> r_off;
};

struct DriveOpts {
    std::string drive_file;
    std::string drive = "rect";
    double period = 1.0;
    double i_plus = 0.05;
    std::optional<double> tau_plus;  // default: 0.2 * period
    double i_minus = -0.05;
    std::optional<double> tau_minus;
    std::string layout = "plus_then_minus";
    double i0 = 0.05;
    // Compound parameters, accepted directly alongside the raw ones. The
    // dynamics of a linear-activation device depends only on these products.
    std::optional<double> gamma_iplus_tauplus;
    std::optional<double> gamma_iminus_tauminus;
    std::optional<double> gamma_i0_T;
};

struct SimOpts {
    std::string x0 = "0.5";
    int periods = 600;
    int steps_per_segment = 16;
    std::optional<double> dt;  // default: period / 256
    int record_stride = 1;
};

struct CommonOpts {
    std::string output;
    std::string manifest;
    unsigned seed = 0;  // reserved; all algorithms are deterministic
};

void add_model_options(CLI::App* cmd, ModelOpts& o) {
    auto* file = cmd->add_option("--model", o.model_file, "Model definition JSON file");
    auto* win = cmd->add_option("--window", o.window, "Window kind: joglekar|biolek");
    cmd->add_option("--p", o.p, "Window exponent (positive integer)");
    cmd->add_option("--activation", o.activation,
                    "Activation kind: linear|threshold|quadratic");
    cmd->add_option("--gamma", o.gamma, "Activation rate constant");
    cmd->add_option("--i-threshold", o.i_threshold, "Threshold current magnitude");
    cmd->add_option("--r-on", o.r_on, "Resistance at x = 1 (ohms)");
    cmd->add_option("--r-off", o.r_off, "Resistance at x = 0 (ohms)");
    file->excludes(win);
}

void add_drive_options(CLI::App* cmd, DriveOpts& o) {
    auto* file = cmd->add_option("--drive-file", o.drive_file, "Drive definition JSON file");
    auto* kind = cmd->add_option("--drive", o.drive, "Drive kind: rect|sin|tri");
    cmd->add_option("--period", o.period, "Drive period T");
    cmd->add_option("--i-plus", o.i_plus, "Positive pulse amplitude");
    cmd->add_option("--tau-plus", o.tau_plus, "Positive pulse duration (default 0.2 T)");
    cmd->add_option("--i-minus", o.i_minus, "Negative pulse amplitude (< 0)");
    cmd->add_option("--tau-minus", o.tau_minus, "Negative pulse duration (default 0.2 T)");
    cmd->add_option("--layout", o.layout, "Pulse order: plus_then_minus|minus_then_plus");
    cmd->add_option("--i0", o.i0, "Sinusoid/triangle amplitude");
    cmd->add_option("--gamma-iplus-tauplus", o.gamma_iplus_tauplus,
                    "Compound gamma * i_plus * tau_plus (linear activation)");
    cmd->add_option("--gamma-iminus-tauminus", o.gamma_iminus_tauminus,
                    "Compound gamma * i_minus * tau_minus (linear activation)");
    cmd->add_option("--gamma-i0-T", o.gamma_i0_T,
                    "Compound gamma * i0 * T (linear activation)");
    file->excludes(kind);
}

// ============================================================================
// Resolution helpers
// ============================================================================

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

memdyn::MemristorModel resolve_model(const ModelOpts& o, json& input_hashes) {
    if (!o.model_file.empty()) {
        const std::string text = read_file(o.model_file);
        input_hashes["model"] = fnv1a_hex(text);
        return memdyn::parse_model_json(text);
    }
    memdyn::WindowSpec window = [&] {
        if (o.window == "joglekar") return memdyn::WindowSpec::joglekar(o.p);
        if (o.window == "biolek") return memdyn::WindowSpec::biolek(o.p);
        throw std::invalid_argument("--window must be joglekar or biolek");
    }();
    memdyn::Activation activation = [&] {
        if (o.activation == "linear") return memdyn::Activation::linear(o.gamma);
        if (o.activation == "threshold")
            return memdyn::Activation::threshold(o.gamma, o.i_threshold);
        if (o.activation == "quadratic") return memdyn::Activation::quadratic(o.gamma);
        throw std::invalid_argument("--activation must be linear, threshold or quadratic");
    }();
    return {std::move(window), activation, o.r_on, o.r_off};
}

memdyn::Waveform resolve_drive(const DriveOpts& o, const memdyn::MemristorModel& model,
                               json& input_hashes) {
    if (!o.drive_file.empty()) {
        const std::string text = read_file(o.drive_file);
        input_hashes["drive"] = fnv1a_hex(text);
        return memdyn::parse_drive_json(text);
    }
    const bool linear = model.activation.kind() == memdyn::ActivationKind::Linear;
    const double gamma = model.activation.gamma();
    if (o.drive == "rect") {
        memdyn::PulseTrain p;
        p.period = o.period;
        p.tau_plus = o.tau_plus.value_or(0.2 * o.period);
        p.tau_minus = o.tau_minus.value_or(0.2 * o.period);
        p.i_plus = o.i_plus;
        p.i_minus = o.i_minus;
        if (o.gamma_iplus_tauplus) {
            if (!linear)
                throw std::invalid_argument(
                    "--gamma-iplus-tauplus requires the linear activation");
            p.i_plus = *o.gamma_iplus_tauplus / (gamma * p.tau_plus);
        }
        if (o.gamma_iminus_tauminus) {
            if (!linear)
                throw std::invalid_argument(
                    "--gamma-iminus-tauminus requires the linear activation");
            p.i_minus = *o.gamma_iminus_tauminus / (gamma * p.tau_minus);
        }
        if (o.layout == "plus_then_minus")
            p.layout = memdyn::PulseLayout::PlusThenMinus;
        else if (o.layout == "minus_then_plus")
            p.layout = memdyn::PulseLayout::MinusThenPlus;
        else
            throw std::invalid_argument("--layout must be plus_then_minus or minus_then_plus");
        return memdyn::Waveform::rectangular(p);
    }
    double i0 = o.i0;
    if (o.gamma_i0_T) {
        if (!linear) throw std::invalid_argument("--gamma-i0-T requires the linear activation");
        i0 = *o.gamma_i0_T / (gamma * o.period);
    }
    if (o.drive == "sin") return memdyn::Waveform::sinusoid(i0, o.period);
    if (o.drive == "tri") return memdyn::Waveform::triangle(i0, o.period);
    throw std::invalid_argument("--drive must be rect, sin or tri");
}

std::vector<std::pair<std::string, double>> parse_x0_list(const std::string& spec) {
    std::vector<std::pair<std::string, double>> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.emplace_back(token, v);
        } catch (const std::exception&) {
            throw std::invalid_argument("--x0 entry '" + token + "' is not a number");
        }
    }
    if (out.empty()) throw std::invalid_argument("--x0 must list at least one initial state");
    return out;
}

fs::path with_suffix(const fs::path& base, const std::string& suffix) {
    fs::path out = base;
    out.replace_filename(base.stem().string() + suffix + base.extension().string());
    return out;
}

// ============================================================================
// Run manifest
// ============================================================================

class ManifestWriter {
public:
    ManifestWriter(std::string command, const CommonOpts& common)
        : command_(std::move(command)),
          path_(!common.manifest.empty()
                    ? fs::path(common.manifest)
                    : (!common.output.empty()
                           ? with_suffix(fs::path(common.output).replace_extension(""),
                                         "_manifest")
                                 .replace_extension(".json")
                           : fs::path(command_ + "_manifest.json"))),
          start_(std::chrono::steady_clock::now()) {}

    json& parameters() { return parameters_; }
    json& input_hashes() { return input_hashes_; }
    void add_output(const fs::path& p) { outputs_.push_back(p.string()); }

    void write() const {
        json m;
        m["command"] = command_;
        m["parameters"] = parameters_;
        m["input_hashes"] = input_hashes_;
        m["outputs"] = outputs_;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        m["duration_seconds"] = std::chrono::duration<double>(elapsed).count();
        if (path_.has_parent_path()) fs::create_directories(path_.parent_path());
        std::ofstream out(path_, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write manifest " + path_.string());
        out << m.dump(2) << '\n';
    }

private:
    std::string command_;
    fs::path path_;
    std::chrono::steady_clock::time_point start_;
    json parameters_ = json::object();
    json input_hashes_ = json::object();
    std::vector<std::string> outputs_;
};

// ============================================================================
// Commands
// ============================================================================

int cmd_simulate(const ModelOpts& mo, const DriveOpts& dr, const SimOpts& so,
                 const CommonOpts& common) {
    ManifestWriter manifest("simulate", common);
    const auto model = resolve_model(mo, manifest.input_hashes());
    const auto wave = resolve_drive(dr, model, manifest.input_hashes());
    const auto x0s = parse_x0_list(so.x0);

    memdyn::SimConfig cfg;
    cfg.periods = so.periods;
    cfg.steps_per_segment = so.steps_per_segment;
    cfg.dt = so.dt.value_or(wave.period() / 256.0);
    cfg.record_stride = so.record_stride;

    manifest.parameters()["model"] = json::parse(memdyn::model_json(model));
    manifest.parameters()["drive"] = json::parse(memdyn::drive_json(wave));
    manifest.parameters()["sim"] = {{"x0", so.x0},
                                    {"periods", cfg.periods},
                                    {"steps_per_segment", cfg.steps_per_segment},
                                    {"dt", cfg.dt},
                                    {"record_stride", cfg.record_stride}};
    manifest.parameters()["seed"] = common.seed;

    const fs::path base(common.output);
    for (const auto& [token, x0] : x0s) {
        cfg.x0 = x0;
        const auto tr = memdyn::integrate(model, wave, cfg);
        const fs::path path = with_suffix(base, "_x0_" + token);
        memdyn::write_trajectory_csv(path, tr);
        manifest.add_output(path);
    }
    manifest.write();
    return 0;
}

int cmd_attractor(const ModelOpts& mo, const DriveOpts& dr, const CommonOpts& common) {
    ManifestWriter manifest("attractor", common);
    const auto model = resolve_model(mo, manifest.input_hashes());
    const auto wave = resolve_drive(dr, model, manifest.input_hashes());
    manifest.parameters()["model"] = json::parse(memdyn::model_json(model));
    manifest.parameters()["drive"] = json::parse(memdyn::drive_json(wave));
    manifest.parameters()["seed"] = common.seed;

    const auto report = memdyn::find_fixed_point(model, wave);
    std::cout << memdyn::report_json(report) << '\n';
    manifest.write();
    return 0;
}

int cmd_sweep(double ap_min, double ap_max, int ap_steps, double am_min, double am_max,
              int am_steps, int p, bool section, const std::string& p_list,
              int section_points, const CommonOpts& common) {
    ManifestWriter manifest("sweep", common);
    manifest.parameters() = {{"a_plus_min", ap_min},   {"a_plus_max", ap_max},
                             {"a_plus_steps", ap_steps}, {"a_minus_min", am_min},
                             {"a_minus_max", am_max},  {"a_minus_steps", am_steps},
                             {"p", p},                 {"section", section},
                             {"p_list", p_list},       {"section_points", section_points},
                             {"seed", common.seed}};
    const fs::path base(common.output);
    if (section) {
        std::stringstream ss(p_list);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token.empty()) continue;
            const int pk = std::stoi(token);
            const auto line = memdyn::sweep_section(pk, section_points);
            const fs::path path = with_suffix(base, "_p" + token);
            memdyn::write_section_csv(path, line);
            manifest.add_output(path);
        }
    } else {
        if (ap_min > ap_max) throw std::invalid_argument("--a-plus-min exceeds --a-plus-max");
        if (am_min > am_max) throw std::invalid_argument("--a-minus-min exceeds --a-minus-max");
        const auto grid = memdyn::sweep_xa({ap_min, ap_max, ap_steps},
                                           {am_min, am_max, am_steps}, p);
        memdyn::write_sweep_csv(base, grid);
        manifest.add_output(base);
    }
    manifest.write();
    return 0;
}

int cmd_potential(const ModelOpts& mo, const DriveOpts& dr, int grid_n,
                  const CommonOpts& common) {
    ManifestWriter manifest("potential", common);
    const auto model = resolve_model(mo, manifest.input_hashes());
    const auto wave = resolve_drive(dr, model, manifest.input_hashes());
    manifest.parameters()["model"] = json::parse(memdyn::model_json(model));
    manifest.parameters()["drive"] = json::parse(memdyn::drive_json(wave));
    manifest.parameters()["grid_n"] = grid_n;
    manifest.parameters()["seed"] = common.seed;

    const auto curve = memdyn::potential(model, wave, grid_n);
    memdyn::write_potential_csv(common.output, curve);
    manifest.add_output(common.output);
    manifest.write();
    return 0;
}

int cmd_classify(const ModelOpts& mo, int grid_n, double tol, const CommonOpts& common) {
    ManifestWriter manifest("classify", common);
    const auto model = resolve_model(mo, manifest.input_hashes());
    manifest.parameters()["window"] =
        json::parse(memdyn::model_json(model))["window"];
    manifest.parameters()["grid_n"] = grid_n;
    manifest.parameters()["tol"] = tol;
    manifest.parameters()["seed"] = common.seed;

    const auto cls = memdyn::classify_window(model.window, grid_n, tol);
    std::cout << memdyn::window_class_json(cls) << '\n';
    manifest.write();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven memristor dynamics: simulation, attractors, sweeps"};
    app.require_subcommand(1);

    ModelOpts model_opts;
    DriveOpts drive_opts;
    SimOpts sim_opts;
    CommonOpts common;

    auto add_common = [&](CLI::App* cmd, bool output_required) {
        auto* out = cmd->add_option("--output,-o", common.output, "Output CSV path");
        if (output_required) out->required();
        cmd->add_option("--manifest", common.manifest, "Run manifest path");
        cmd->add_option("--seed", common.seed, "Reserved; accepted but unused");
    };

    auto* simulate = app.add_subcommand("simulate", "Integrate the driven state equation");
    add_model_options(simulate, model_opts);
    add_drive_options(simulate, drive_opts);
    simulate->add_option("--x0", sim_opts.x0, "Comma-separated initial states");
    simulate->add_option("--periods", sim_opts.periods, "Drive periods to simulate");
    simulate->add_option("--steps-per-segment", sim_opts.steps_per_segment,
                         "Sub-steps per constant-current segment");
    simulate->add_option("--dt", sim_opts.dt, "Time step for sin/tri drives (default T/256)");
    simulate->add_option("--record-stride", sim_opts.record_stride, "Output decimation");
    add_common(simulate, true);

    auto* attractor = app.add_subcommand("attractor", "Locate the averaged fixed point");
    add_model_options(attractor, model_opts);
    add_drive_options(attractor, drive_opts);
    add_common(attractor, false);

    double ap_min = 0.2, ap_max = 10.0, am_min = -10.0, am_max = -0.2;
    int ap_steps = 50, am_steps = 50, sweep_p = 1, section_points = 100;
    bool section = false;
    std::string p_list = "1,2,5,10";
    auto* sweep = app.add_subcommand("sweep", "Attractor location over pulse strengths");
    sweep->add_option("--a-plus-min", ap_min, "Lowest a_plus");
    sweep->add_option("--a-plus-max", ap_max, "Highest a_plus");
    sweep->add_option("--a-plus-steps", ap_steps, "a_plus grid points");
    sweep->add_option("--a-minus-min", am_min, "Lowest a_minus");
    sweep->add_option("--a-minus-max", am_max, "Highest a_minus");
    sweep->add_option("--a-minus-steps", am_steps, "a_minus grid points");
    sweep->add_option("--p", sweep_p, "Window exponent for the grid sweep");
    sweep->add_flag("--section", section, "Emit the a_minus = a_plus - 10 section instead");
    sweep->add_option("--p-list", p_list, "Exponents for the section (comma-separated)");
    sweep->add_option("--section-points", section_points, "Samples along the section");
    add_common(sweep, true);

    int grid_n = 1001;
    auto* potential = app.add_subcommand("potential", "Sampled potential curve U(x)");
    add_model_options(potential, model_opts);
    add_drive_options(potential, drive_opts);
    potential->add_option("--grid-n", grid_n, "Grid points on [0, 1]");
    add_common(potential, true);

    int classify_grid_n = 1001;
    double classify_tol = 1e-9;
    auto* classify = app.add_subcommand("classify", "Structural window classification");
    add_model_options(classify, model_opts);
    classify->add_option("--grid-n", classify_grid_n, "Classification grid points");
    classify->add_option("--tol", classify_tol, "Classification tolerance");
    add_common(classify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "memdyn: error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(simulate))
            return cmd_simulate(model_opts, drive_opts, sim_opts, common);
        if (app.got_subcommand(attractor))
            return cmd_attractor(model_opts, drive_opts, common);
        if (app.got_subcommand(sweep))
            return cmd_sweep(ap_min, ap_max, ap_steps, am_min, am_max, am_steps, sweep_p,
                             section, p_list, section_points, common);
        if (app.got_subcommand(potential))
            return cmd_potential(model_opts, drive_opts, grid_n, common);
        if (app.got_subcommand(classify))
            return cmd_classify(model_opts, classify_grid_n, classify_tol, common);
    } catch (const std::invalid_argument& e) {
        std::cerr << "memdyn: error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "memdyn: error: " << e.what() << '\n';
        return 2;
    } catch (const memdyn::NumericalError& e) {
        std::cerr << "memdyn: numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "memdyn: failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
