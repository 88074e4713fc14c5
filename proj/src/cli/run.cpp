#include "qhd/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "qhd/cli/emit.hpp"
#include "qhd/cli/svg.hpp"
#include "qhd/experiments.hpp"
#include "qhd/phase_plane.hpp"
#include "qhd/profile.hpp"

namespace qhd::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string label(const RunConfig& cfg) {
    std::string out;
    auto part = [&](const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (!out.empty()) out += '_';
        out += key + short_num(*v);
    };
    part("g", cfg.gamma);
    if (cfg.mode != Mode::Rh && cfg.mode != Mode::Loop && cfg.mode != Mode::SweepMu) part("mu", cfg.mu);
    part("k", cfg.mode == Mode::Rh ? std::nullopt : cfg.k);
    part("s", cfg.s);
    part("A", cfg.A);
    part("B", cfg.B);
    part("rm", cfg.rho_minus);
    part("rp", cfg.rho_plus);
    return out;
}

Json complex_pair(const std::array<std::complex<double>, 2>& ev) {
    Json out = Json::array();
    for (const auto& z : ev) out.push_back({{"re", z.real()}, {"im", z.imag()}});
    return out;
}

Json end_state(const EndState& w) { return {{"rho", w.rho}, {"u", w.u}}; }

Json shock_json(const ShockData& shock) {
    return {{"left", end_state(shock.left)},
            {"right", end_state(shock.right)},
            {"s", shock.s},
            {"family", to_string(shock.family)},
            {"A", shock.constants.A},
            {"B", shock.constants.B},
            {"P_minus", shock.P_minus},
            {"P_plus", shock.P_plus}};
}

Json hypotheses_json(const HypothesisReport& h) {
    return {{"case", to_string(h.existence_case)},
            {"condition", to_string(h.condition)},
            {"left_sonic", to_string(h.left_sonic)},
            {"right_sonic", to_string(h.right_sonic)},
            {"subsonic_condition", h.subsonic_condition},
            {"signed_velocity_condition", h.signed_velocity_condition},
            {"sign_chain_margin", h.sign_chain_margin},
            {"notes", h.notes}};
}

Json equilibrium_json(const char* role, const EquilibriumReport& r) {
    Json j{{"role", role},
           {"P", r.P_eq},
           {"f_prime", r.slope},
           {"kind", to_string(r.kind)},
           {"eigenvalues", complex_pair(r.eigenvalues)}};
    if (r.unstable_eigvec) j["unstable_eigvec"] = {(*r.unstable_eigvec)[0], (*r.unstable_eigvec)[1]};
    if (r.stable_eigvec) j["stable_eigvec"] = {(*r.stable_eigvec)[0], (*r.stable_eigvec)[1]};
    return j;
}

FluidParams params_of(const RunConfig& cfg) {
    // the loop is inviscid; mu only has to be a valid placeholder there
    return FluidParams(*cfg.gamma, cfg.mu.value_or(1.0), *cfg.k);
}

ShockData shock_of(const RunConfig& cfg, const FluidParams& params) {
    if (cfg.constants_mode()) {
        return shock_from_constants({*cfg.A, *cfg.B, *cfg.s}, params);
    }
    return select_admissible_branch(*cfg.rho_minus, *cfg.rho_plus, *cfg.s, *cfg.gamma);
}

Table profile_table(const Profile& profile, int stride) {
    Table t{{"y", "P", "Q", "rho", "u"}, {}};
    for (const auto& r : profile_fields(profile, stride)) {
        t.rows.push_back({format_number(r.y), format_number(r.P), format_number(r.Q), format_number(r.rho),
                          format_number(r.u)});
    }
    return t;
}

Json profile_json(const Profile& profile, int stride) {
    Json cols{{"y", Json::array()}, {"P", Json::array()}, {"Q", Json::array()}, {"rho", Json::array()},
              {"u", Json::array()}};
    for (const auto& r : profile_fields(profile, stride)) {
        cols["y"].push_back(r.y);
        cols["P"].push_back(r.P);
        cols["Q"].push_back(r.Q);
        cols["rho"].push_back(r.rho);
        cols["u"].push_back(r.u);
    }
    return {{"shock", shock_json(profile.shock)},
            {"mu", profile.params.mu()},
            {"k", profile.params.k()},
            {"gamma", profile.params.gamma()},
            {"case", to_string(profile.existence_case)},
            {"classification", to_string(profile.classification)},
            {"extrema_count", profile.extrema_count},
            {"converged", profile.converged},
            {"terminal_error", profile.terminal_error},
            {"P_star", profile.P_star},
            {"columns", cols}};
}

Series density_series(const Profile& profile, int stride, std::string name) {
    Series s{std::move(name), {}, {}};
    for (const auto& r : profile_fields(profile, stride)) {
        s.x.push_back(r.y);
        s.y.push_back(r.rho);
    }
    return s;
}

Series loop_series(const HomoclinicLoop& loop) {
    Series s{"homoclinic loop", {}, {}};
    for (const auto& p : loop.samples) {
        s.x.push_back(p.P);
        s.y.push_back(p.Q_upper);
    }
    for (auto it = loop.samples.rbegin(); it != loop.samples.rend(); ++it) {
        s.x.push_back(it->P);
        s.y.push_back(it->Q_lower);
    }
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Outputs {
public:
    Outputs(const RunConfig& cfg, std::string stem) : cfg_(cfg), stem_(std::move(stem)) {}

    void add(Format f, const std::string& suffix, std::string content) {
        if (!cfg_.wants(f)) return;
        files_.push_back({cfg_.output.directory / (stem_ + suffix + "." + to_string(f)), std::move(content)});
    }
    bool wants(Format f) const { return cfg_.wants(f); }
    std::vector<OutputFile> take() { return std::move(files_); }

private:
    const RunConfig& cfg_;
    std::string stem_;
    std::vector<OutputFile> files_;
};

void render_rh(const RunConfig& cfg, Outputs& out) {
    const double gamma = *cfg.gamma;
    const double s = *cfg.s;
    const double rm = *cfg.rho_minus;
    const double rp = *cfg.rho_plus;
    const auto branches = rh_velocity_branches(rm, rp, s, gamma);

    Json selection = nullptr;
    int selected = 0;
    std::string selection_error;
    try {
        const ShockData shock = select_admissible_branch(rm, rp, s, gamma);
        selected = shock.family == LaxFamily::Lax2 ? 2 : 1;
        selection = shock_json(shock);
        selection["branch"] = selected;
        try {
            selection["hypotheses"] = hypotheses_json(check_profile_hypotheses(shock, gamma));
        } catch (const NoProfileGuaranteeError& e) {
            selection["hypotheses"] = nullptr;
            selection["hypotheses_error"] = e.what();
        }
    } catch (const NoAdmissibleProfileError& e) {
        selection_error = e.what();
    }

    Table table{{"branch", "u_minus", "u_plus", "family", "left_sonic", "right_sonic", "selected"}, {}};
    Json jbranches = Json::array();
    int index = 1;
    for (const auto* b : {&branches.branch1, &branches.branch2}) {
        const EndState left{rm, b->u_minus};
        const EndState right{rp, b->u_plus};
        const char* family = to_string(lax_classify(left, right, s, gamma));
        const char* ls = to_string(sonic_classify(left, gamma));
        const char* rs = to_string(sonic_classify(right, gamma));
        table.rows.push_back({std::to_string(index), format_number(b->u_minus), format_number(b->u_plus), family, ls,
                              rs, selected == index ? "1" : "0"});
        jbranches.push_back({{"branch", index},
                             {"u_minus", b->u_minus},
                             {"u_plus", b->u_plus},
                             {"family", family},
                             {"left_sonic", ls},
                             {"right_sonic", rs}});
        ++index;
    }
    Json doc{{"mode", "rh"},
             {"gamma", gamma},
             {"s", s},
             {"rho_minus", rm},
             {"rho_plus", rp},
             {"d", branches.d},
             {"branches", jbranches},
             {"admissible", selection}};
    if (!selection_error.empty()) doc["admissible_error"] = selection_error;
    out.add(Format::Csv, "", to_csv(table));
    out.add(Format::Json, "", dump(doc));
}

void render_classify(const RunConfig& cfg, Outputs& out) {
    const FluidParams params = params_of(cfg);
    const ShockData shock = shock_of(cfg, params);
    const auto hyp = check_profile_hypotheses(shock, params.gamma());
    const auto left = equilibrium_report(shock.P_minus, shock.constants, params);
    const auto right = equilibrium_report(shock.P_plus, shock.constants, params);
    const Monotonicity mono = classify_monotonicity(shock, params);

    Table table{{"end", "P", "f_prime", "lambda1_re", "lambda1_im", "lambda2_re", "lambda2_im", "kind"}, {}};
    for (const auto& [name, r] : {std::pair{"minus", &left}, std::pair{"plus", &right}}) {
        table.rows.push_back({name, format_number(r->P_eq), format_number(r->slope),
                              format_number(r->eigenvalues[0].real()), format_number(r->eigenvalues[0].imag()),
                              format_number(r->eigenvalues[1].real()), format_number(r->eigenvalues[1].imag()),
                              to_string(r->kind)});
    }
    const double P_attr = hyp.existence_case == ExistenceCase::CaseI ? shock.P_plus : shock.P_minus;
    const double slope = forcing_slope(P_attr, shock.constants, params.gamma());
    Json doc{{"mode", "classify"},
             {"gamma", params.gamma()},
             {"mu", params.mu()},
             {"k", params.k()},
             {"shock", shock_json(shock)},
             {"hypotheses", hypotheses_json(hyp)},
             {"equilibria", {equilibrium_json("minus", left), equilibrium_json("plus", right)}},
             {"damping_ratio", std::abs(shock.s) * params.mu() / params.k()},
             {"sqrt_neg_f_prime", slope < 0.0 ? std::sqrt(-slope) : NAN},
             {"classification", to_string(mono)}};
    out.add(Format::Csv, "", to_csv(table));
    out.add(Format::Json, "", dump(doc));
}

void render_profile(const RunConfig& cfg, Outputs& out) {
    const FluidParams params = params_of(cfg);
    const Profile profile = shoot_heteroclinic(shock_of(cfg, params), params, cfg.solver);
    const int stride = cfg.output.stride;
    out.add(Format::Csv, "", to_csv(profile_table(profile, stride)));
    Json doc{{"mode", "profile"}};
    doc.update(profile_json(profile, stride));
    out.add(Format::Json, "", dump(doc));
    if (out.wants(Format::Svg)) {
        const std::string title = std::string("density profile (") + to_string(profile.classification) +
                                  ", mu/k = " + short_num(params.mu() / params.k()) + ")";
        out.add(Format::Svg, "", emit_svg({density_series(profile, stride, "rho")}, {title, "y", "rho", 640, 480}));
    }
}

void render_loop_or_phase(const RunConfig& cfg, Outputs& out, bool with_profile) {
    const FluidParams params = params_of(cfg);
    const ShockData shock = shock_of(cfg, params);
    const ProfileConstants& c = shock.constants;
    const HomoclinicLoop loop = homoclinic_loop(c, params, cfg.loop_samples);
    const RootPair roots{std::min(shock.P_minus, shock.P_plus), loop.P_saddle};
    const double P0 = find_forcing_minimum(c, params, roots);

    Json jloop{{"P_star", loop.P_star},
               {"P0", P0},
               {"P_saddle", loop.P_saddle},
               {"P_attractor", roots.lower},
               {"P", Json::array()},
               {"Q_upper", Json::array()},
               {"Q_lower", Json::array()}};
    for (const auto& p : loop.samples) {
        jloop["P"].push_back(p.P);
        jloop["Q_upper"].push_back(p.Q_upper);
        jloop["Q_lower"].push_back(p.Q_lower);
    }

    if (!with_profile) {
        Table table{{"P", "Q_upper", "Q_lower"}, {}};
        for (const auto& p : loop.samples) {
            table.rows.push_back({format_number(p.P), format_number(p.Q_upper), format_number(p.Q_lower)});
        }
        Json doc{{"mode", "loop"}, {"shock", shock_json(shock)}, {"loop", jloop}};
        out.add(Format::Csv, "", to_csv(table));
        out.add(Format::Json, "", dump(doc));
        if (out.wants(Format::Svg)) {
            out.add(Format::Svg, "", emit_svg({loop_series(loop)}, {"homoclinic loop", "P", "Q", 640, 480}));
        }
        return;
    }

    const Profile profile = shoot_heteroclinic(shock, params, cfg.solver);
    const auto rows = profile_fields(profile, cfg.output.stride);
    Table table{{"curve", "P", "Q"}, {}};
    const Series closed = loop_series(loop);
    for (std::size_t i = 0; i < closed.x.size(); ++i) {
        table.rows.push_back({"loop", format_number(closed.x[i]), format_number(closed.y[i])});
    }
    Series orbit{"heteroclinic", {}, {}};
    for (const auto& r : rows) {
        table.rows.push_back({"heteroclinic", format_number(r.P), format_number(r.Q)});
        orbit.x.push_back(r.P);
        orbit.y.push_back(r.Q);
    }
    Json doc{{"mode", "phase"},
             {"shock", shock_json(shock)},
             {"loop", jloop},
             {"heteroclinic", profile_json(profile, cfg.output.stride)}};
    out.add(Format::Csv, "", to_csv(table));
    out.add(Format::Json, "", dump(doc));
    if (out.wants(Format::Svg)) {
        out.add(Format::Svg, "", emit_svg({closed, orbit}, {"phase portrait", "P", "Q", 640, 480}));
    }
}

void render_sweep(const RunConfig& cfg, Outputs& out) {
    const bool by_mu = cfg.mode == Mode::SweepMu;
    SweepSpec spec{{*cfg.gamma, *cfg.k, *cfg.s, *cfg.rho_minus}, MuSweep{}, cfg.solver};
    if (by_mu) {
        std::vector<double> mu = cfg.mu_values;
        for (double ratio : cfg.mu_over_k_values) mu.push_back(ratio * *cfg.k);
        spec.varying = MuSweep{*cfg.rho_plus, mu};
    } else {
        spec.varying = RhoPlusSweep{*cfg.mu, cfg.rho_plus_values};
    }
    const SweepResult result = by_mu ? sweep_viscosity(spec) : sweep_vacuum(spec);

    Table table{{"row", "mu", "mu_over_k", "rho_plus", "u_minus", "u_plus", "sqrt_neg_f_prime", "sound_speed_right",
                 "right_sonic", "classification", "lambda1_re", "lambda1_im", "lambda2_re", "lambda2_im",
                 "extrema_count", "converged", "terminal_error", "error"},
                {}};
    Json jrows = Json::array();
    std::vector<Series> overlay;
    for (std::size_t i = 0; i < result.report.rows.size(); ++i) {
        const SweepRow& r = result.report.rows[i];
        const char* cls = r.classification ? to_string(*r.classification) : "";
        std::string err = r.error;
        for (char& ch : err) {
            if (ch == ',' || ch == '\n') ch = ';';
        }
        table.rows.push_back({std::to_string(i + 1), format_number(r.mu), format_number(r.mu_over_k),
                              format_number(r.rho_plus), format_number(r.u_minus), format_number(r.u_plus),
                              format_number(r.sqrt_neg_slope), format_number(r.sound_speed_right),
                              to_string(r.right_sonic), cls, format_number(r.eigenvalues[0].real()),
                              format_number(r.eigenvalues[0].imag()), format_number(r.eigenvalues[1].real()),
                              format_number(r.eigenvalues[1].imag()), std::to_string(r.extrema_count),
                              r.converged ? "1" : "0", format_number(r.terminal_error), err});
        Json jr{{"row", i + 1},
                {"mu", r.mu},
                {"mu_over_k", r.mu_over_k},
                {"rho_plus", r.rho_plus},
                {"u_minus", r.u_minus},
                {"u_plus", r.u_plus},
                {"sqrt_neg_f_prime", r.sqrt_neg_slope},
                {"sound_speed_right", r.sound_speed_right},
                {"right_sonic", to_string(r.right_sonic)},
                {"classification", r.classification ? Json(cls) : Json(nullptr)},
                {"eigenvalues", complex_pair(r.eigenvalues)},
                {"extrema_count", r.extrema_count},
                {"converged", r.converged},
                {"terminal_error", r.terminal_error}};
        if (!r.error.empty()) jr["error"] = r.error;
        jrows.push_back(jr);

        const auto& profile = result.profiles[i];
        if (!profile) continue;
        const std::string suffix = "-row" + std::to_string(i + 1);
        out.add(Format::Csv, suffix, to_csv(profile_table(*profile, cfg.output.stride)));
        if (out.wants(Format::Svg)) {
            const std::string name = by_mu ? "mu/k = " + short_num(r.mu_over_k) : "rho+ = " + short_num(r.rho_plus);
            Series series = density_series(*profile, cfg.output.stride, name);
            overlay.push_back(series);
            const std::string title = std::string(1, static_cast<char>('A' + i % 26)) + ": " + name + " (" + cls + ")";
            out.add(Format::Svg, suffix, emit_svg({series}, {title, "y", "rho", 640, 480}));
        }
    }
    Json doc{{"mode", to_string(cfg.mode)},
             {"gamma", *cfg.gamma},
             {"k", *cfg.k},
             {"s", *cfg.s},
             {"rho_minus", *cfg.rho_minus},
             {"rows", jrows}};
    out.add(Format::Csv, "", to_csv(table));
    out.add(Format::Json, "", dump(doc));
    if (!by_mu && !overlay.empty()) {
        out.add(Format::Svg, "-overlay", emit_svg(overlay, {"profiles approaching vacuum", "y", "rho", 640, 480}));
    }
}

}  // namespace

std::vector<OutputFile> render(const RunConfig& cfg) {
    std::string stem = to_string(cfg.mode);
    if (cfg.use_preset) stem += "-preset";
    const std::string lab = label(cfg);
    if (!lab.empty()) stem += "-" + lab;
    Outputs out(cfg, stem);
    switch (cfg.mode) {
        case Mode::Rh: render_rh(cfg, out); break;
        case Mode::Classify: render_classify(cfg, out); break;
        case Mode::Profile: render_profile(cfg, out); break;
        case Mode::Loop: render_loop_or_phase(cfg, out, false); break;
        case Mode::Phase: render_loop_or_phase(cfg, out, true); break;
        case Mode::SweepMu:
        case Mode::SweepVacuum: render_sweep(cfg, out); break;
    }
    return out.take();
}

RunResult run(const RunConfig& cfg) {
    std::vector<OutputFile> files;
    try {
        files = render(cfg);
    } catch (const std::exception& e) {
        return {kExitNumerical, {}, e.what()};
    }

    namespace fs = std::filesystem;
    std::vector<fs::path> written;
    try {
        fs::create_directories(cfg.output.directory);
        for (const auto& f : files) {
            fs::path tmp = f.path;
            tmp += ".partial";
            written.push_back(tmp);
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            os << f.content;
            os.close();
            if (!os) throw std::runtime_error("cannot write " + tmp.string());
        }
        for (const auto& f : files) {
            fs::path tmp = f.path;
            tmp += ".partial";
            fs::rename(tmp, f.path);
            std::replace(written.begin(), written.end(), tmp, f.path);
        }
    } catch (const std::exception& e) {
        std::error_code ec;
        for (const auto& p : written) fs::remove(p, ec);
        return {kExitNumerical, {}, e.what()};
    }
    return {kExitOk, written, ""};
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    const RunResult result = run(cfg);
    if (result.exit_status != kExitOk) {
        err << "error: " << result.message << "\n";
        return result.exit_status;
    }
    for (const auto& p : result.written) out << p.string() << "\n";
    return kExitOk;
}

}  // namespace qhd::cli
