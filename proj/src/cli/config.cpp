#include "qhd/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "CLI11.hpp"

namespace qhd::cli {

namespace {

const std::map<std::string, Mode> kModes{
    {"rh", Mode::Rh},
    {"classify", Mode::Classify},
    {"profile", Mode::Profile},
    {"loop", Mode::Loop},
    {"phase", Mode::Phase},
    {"sweep-mu", Mode::SweepMu},
    {"sweep-vacuum", Mode::SweepVacuum},
};

const std::map<std::string, Format> kFormats{
    {"csv", Format::Csv},
    {"json", Format::Json},
    {"svg", Format::Svg},
};

void require(const std::optional<double>& value, const char* flag, Mode mode) {
    if (!value) {
        throw UsageError(std::string("mode '") + to_string(mode) + "' requires " + flag);
    }
}

void require_state_or_constants(const RunConfig& cfg) {
    const bool any_density = cfg.rho_minus || cfg.rho_plus;
    const bool any_constant = cfg.A || cfg.B;
    if (any_density && any_constant) {
        throw UsageError("--A/--B conflict with --rho-minus/--rho-plus: give end states or constants, not both");
    }
    if (any_constant) {
        require(cfg.A, "--A", cfg.mode);
        require(cfg.B, "--B", cfg.mode);
        return;
    }
    require(cfg.rho_minus, "--rho-minus", cfg.mode);
    require(cfg.rho_plus, "--rho-plus", cfg.mode);
}

void fill(std::optional<double>& slot, double value) {
    if (!slot) slot = value;
}

void validate(RunConfig& cfg) {
    if (cfg.output.stride < 1) throw UsageError("--stride must be >= 1");
    if (cfg.loop_samples < 2) throw UsageError("--samples must be >= 2");
    if (!(cfg.solver.tol > 0.0)) throw UsageError("--tol must be positive");
    if (!(cfg.solver.y_max > 0.0)) throw UsageError("--y-max must be positive");
    if (!(cfg.solver.conv_tol > 0.0)) throw UsageError("--conv-tol must be positive");

    const Mode mode = cfg.mode;
    if (cfg.use_preset && mode != Mode::SweepMu && mode != Mode::SweepVacuum) {
        throw UsageError("--preset only applies to sweep-mu and sweep-vacuum");
    }
    const bool sweep = mode == Mode::SweepMu || mode == Mode::SweepVacuum;
    if (!sweep && (!cfg.mu_values.empty() || !cfg.mu_over_k_values.empty() || !cfg.rho_plus_values.empty())) {
        throw UsageError("value lists only apply to sweep modes");
    }

    switch (mode) {
        case Mode::Rh:
            if (cfg.A || cfg.B) throw UsageError("mode 'rh' takes end-state densities, not --A/--B");
            require(cfg.gamma, "--gamma", mode);
            require(cfg.s, "--s", mode);
            require(cfg.rho_minus, "--rho-minus", mode);
            require(cfg.rho_plus, "--rho-plus", mode);
            break;
        case Mode::Classify:
        case Mode::Profile:
        case Mode::Phase:
            require(cfg.gamma, "--gamma", mode);
            require(cfg.mu, "--mu", mode);
            require(cfg.k, "--k", mode);
            require(cfg.s, "--s", mode);
            require_state_or_constants(cfg);
            break;
        case Mode::Loop:
            require(cfg.gamma, "--gamma", mode);
            require(cfg.k, "--k", mode);
            require(cfg.s, "--s", mode);
            require_state_or_constants(cfg);
            break;
        case Mode::SweepMu:
            if (cfg.A || cfg.B) throw UsageError("sweeps take end-state densities, not --A/--B");
            if (!cfg.rho_plus_values.empty()) throw UsageError("--rho-plus-values belongs to sweep-vacuum");
            if (!cfg.mu_values.empty() && !cfg.mu_over_k_values.empty()) {
                throw UsageError("--mu-values conflicts with --mu-over-k-values");
            }
            if (cfg.use_preset) {
                fill(cfg.gamma, 5.0 / 3.0);
                fill(cfg.k, std::sqrt(2.0));
                fill(cfg.s, 1.0);
                fill(cfg.rho_minus, 1.5);
                fill(cfg.rho_plus, 1.0);
                if (cfg.mu_values.empty() && cfg.mu_over_k_values.empty()) cfg.mu_values = {4.0, 1.0, 0.5, 0.25};
            }
            require(cfg.gamma, "--gamma", mode);
            require(cfg.k, "--k", mode);
            require(cfg.s, "--s", mode);
            require(cfg.rho_minus, "--rho-minus", mode);
            require(cfg.rho_plus, "--rho-plus", mode);
            if (cfg.mu_values.empty() && cfg.mu_over_k_values.empty()) {
                throw UsageError("mode 'sweep-mu' requires --mu-values or --mu-over-k-values");
            }
            break;
        case Mode::SweepVacuum:
            if (cfg.A || cfg.B) throw UsageError("sweeps take end-state densities, not --A/--B");
            if (!cfg.mu_values.empty() || !cfg.mu_over_k_values.empty()) {
                throw UsageError("mu lists belong to sweep-mu");
            }
            if (cfg.rho_plus) throw UsageError("--rho-plus conflicts with --rho-plus-values in sweep-vacuum");
            if (cfg.use_preset) {
                fill(cfg.gamma, 1.5);
                fill(cfg.mu, 1.2);
                fill(cfg.k, std::sqrt(2.0));
                fill(cfg.s, 1.0);
                fill(cfg.rho_minus, 0.5);
                if (cfg.rho_plus_values.empty()) cfg.rho_plus_values = {0.4, 0.3, 0.1, 0.05};
            }
            require(cfg.gamma, "--gamma", mode);
            require(cfg.mu, "--mu", mode);
            require(cfg.k, "--k", mode);
            require(cfg.s, "--s", mode);
            require(cfg.rho_minus, "--rho-minus", mode);
            if (cfg.rho_plus_values.empty()) {
                throw UsageError("mode 'sweep-vacuum' requires --rho-plus-values");
            }
            break;
    }
}

}  // namespace

const char* to_string(Mode mode) {
    for (const auto& [name, m] : kModes) {
        if (m == mode) return name.c_str();
    }
    return "?";
}

const char* to_string(Format format) {
    for (const auto& [name, f] : kFormats) {
        if (f == format) return name.c_str();
    }
    return "?";
}

bool RunConfig::wants(Format f) const {
    return std::find(output.formats.begin(), output.formats.end(), f) != output.formats.end();
}

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Shock profiles of a dispersive, viscous Euler model: jumps, phase plane, shooting, sweeps", "qhdwave"};
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "Read `key = value` lines (# comments) from a file; flags override it");
    app.get_formatter()->column_width(34);

    std::string mode_name;
    app.add_option("mode", mode_name, "rh | classify | profile | loop | phase | sweep-mu | sweep-vacuum")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"rh", "classify", "profile", "loop", "phase",
                                                       "sweep-mu", "sweep-vacuum"}));

    auto add_real = [&](const char* name, std::optional<double>& slot, const char* help) {
        app.add_option(name, slot, help);
    };
    add_real("--gamma", cfg.gamma, "Adiabatic exponent (>= 1; 1 is isothermal)");
    add_real("--mu", cfg.mu, "Viscosity coefficient (> 0)");
    add_real("--k", cfg.k, "Dispersion coefficient (> 0)");
    add_real("--s", cfg.s, "Wave speed (!= 0)");
    add_real("--rho-minus", cfg.rho_minus, "Left end-state density");
    add_real("--rho-plus", cfg.rho_plus, "Right end-state density");
    add_real("--A", cfg.A, "Mass-flux constant (constants mode, with --B)");
    add_real("--B", cfg.B, "Bernoulli constant (constants mode, with --A)");

    app.add_option("--mu-values", cfg.mu_values, "sweep-mu: viscosities")->delimiter(',');
    app.add_option("--mu-over-k-values", cfg.mu_over_k_values, "sweep-mu: ratios mu/k")->delimiter(',');
    app.add_option("--rho-plus-values", cfg.rho_plus_values, "sweep-vacuum: right densities")->delimiter(',');
    app.add_flag("--preset", cfg.use_preset, "sweep modes: fill unset parameters with the built-in reference case");

    app.add_option("--tol", cfg.solver.tol, "Integrator local error tolerance")->capture_default_str();
    app.add_option("--perturbation", cfg.solver.perturbation,
                   "Start offset from the saddle (<= 0: 1e-6 * P_saddle)")
        ->capture_default_str();
    app.add_option("--y-max", cfg.solver.y_max, "Give up when y exceeds this")->capture_default_str();
    app.add_option("--conv-tol", cfg.solver.conv_tol, "Arrival distance to the end state")->capture_default_str();
    app.add_option("--samples", cfg.loop_samples, "loop/phase: samples per loop branch")->capture_default_str();

    std::string out_dir = ".";
    std::vector<std::string> formats;
    app.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    app.add_option("--format", formats, "csv | json | svg (repeatable; default csv)")
        ->check(CLI::IsMember(std::vector<std::string>{"csv", "json", "svg"}));
    app.add_option("--stride", cfg.output.stride, "Keep every n-th profile sample in output")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.mode = kModes.at(mode_name);
    cfg.output.directory = out_dir;
    for (const auto& f : formats) cfg.output.formats.push_back(kFormats.at(f));
    if (cfg.output.formats.empty()) cfg.output.formats.push_back(Format::Csv);
    std::sort(cfg.output.formats.begin(), cfg.output.formats.end());
    cfg.output.formats.erase(std::unique(cfg.output.formats.begin(), cfg.output.formats.end()),
                             cfg.output.formats.end());

    validate(cfg);
    return cfg;
}

}  // namespace qhd::cli
