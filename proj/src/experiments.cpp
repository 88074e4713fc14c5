#include "qhd/experiments.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "qhd/errors.hpp"

namespace qhd {

namespace {

struct RowInput {
    double mu;
    double rho_plus;
};

struct RowOutput {
    SweepRow row;
    std::optional<Profile> profile;
};

RowOutput run_row(const SweepBase& base, const RowInput& in, const ShootOptions& opts) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    RowOutput out;
    SweepRow& row = out.row;
    row.mu = in.mu;
    row.rho_plus = in.rho_plus;
    row.mu_over_k = in.mu / base.k;
    row.u_minus = nan;
    row.u_plus = nan;
    row.sqrt_neg_slope = nan;
    row.sound_speed_right = nan;
    row.right_sonic = Sonic::Sonic;
    row.eigenvalues = {std::complex<double>(nan, nan), std::complex<double>(nan, nan)};
    row.extrema_count = 0;
    row.converged = false;
    row.terminal_error = nan;

    try {
        const FluidParams params(base.gamma, in.mu, base.k);
        const ShockData shock = select_admissible_branch(base.rho_minus, in.rho_plus, base.s, base.gamma);
        row.u_minus = shock.left.u;
        row.u_plus = shock.right.u;
        row.sound_speed_right = sound_speed(shock.right.rho, base.gamma);
        row.right_sonic = sonic_classify(shock.right, base.gamma);

        const double P_attr = attracting_root(shock);
        const ProfileConstants oriented{shock.constants.A, shock.constants.B, std::abs(shock.s)};
        const double slope = forcing_slope(P_attr, oriented, base.gamma);
        if (slope < 0.0) row.sqrt_neg_slope = std::sqrt(-slope);
        row.eigenvalues = equilibrium_report(P_attr, oriented, params).eigenvalues;
        row.classification = classify_monotonicity(shock, params);

        Profile profile = shoot_heteroclinic(shock, params, opts);
        row.extrema_count = profile.extrema_count;
        row.converged = profile.converged;
        row.terminal_error = profile.terminal_error;
        out.profile = std::move(profile);
    } catch (const NonConvergenceError& e) {
        row.terminal_error = e.terminal_error();
        row.error = e.what();
    } catch (const Error& e) {
        row.error = e.what();
    }
    return out;
}

void validate_base(const SweepBase& base) {
    if (!(base.gamma >= 1.0 - kIsothermalBand) || !(base.k > 0.0) || base.s == 0.0 || !(base.rho_minus > 0.0)) {
        throw PreconditionError("sweep base parameters must be positive (gamma >= 1, s != 0)");
    }
}

SweepResult run_rows(const SweepSpec& spec, const std::vector<RowInput>& inputs) {
    std::vector<std::future<RowOutput>> pending;
    pending.reserve(inputs.size());
    for (const auto& in : inputs) {
        pending.push_back(std::async(std::launch::async, run_row, spec.base, in, spec.solver_opts));
    }
    SweepResult result;
    for (auto& f : pending) {
        RowOutput out = f.get();
        result.report.rows.push_back(std::move(out.row));
        result.profiles.push_back(std::move(out.profile));
    }
    return result;
}

}  // namespace

SweepSpec viscosity_sweep_preset() {
    const double k = std::sqrt(2.0);
    return {{5.0 / 3.0, k, 1.0, 1.5}, MuSweep{1.0, {4.0, 1.0, 0.5, 0.25}}, ShootOptions{}};
}

SweepSpec vacuum_sweep_preset() {
    return {{1.5, std::sqrt(2.0), 1.0, 0.5}, RhoPlusSweep{1.2, {0.4, 0.3, 0.1, 0.05}}, ShootOptions{}};
}

SweepResult sweep_viscosity(const SweepSpec& spec) {
    const auto* sweep = std::get_if<MuSweep>(&spec.varying);
    if (!sweep) {
        throw PreconditionError("viscosity sweep needs a list of mu values");
    }
    validate_base(spec.base);
    if (sweep->mu.empty() || !(sweep->rho_plus > 0.0)) {
        throw PreconditionError("viscosity sweep needs a non-empty mu list and rho+ > 0");
    }
    std::vector<RowInput> inputs;
    for (double mu : sweep->mu) {
        if (!(mu > 0.0)) throw PreconditionError("mu values must be positive");
        inputs.push_back({mu, sweep->rho_plus});
    }
    return run_rows(spec, inputs);
}

SweepResult sweep_vacuum(const SweepSpec& spec) {
    const auto* sweep = std::get_if<RhoPlusSweep>(&spec.varying);
    if (!sweep) {
        throw PreconditionError("vacuum sweep needs a list of rho+ values");
    }
    validate_base(spec.base);
    if (sweep->rho_plus.empty() || !(sweep->mu > 0.0)) {
        throw PreconditionError("vacuum sweep needs a non-empty rho+ list and mu > 0");
    }
    std::vector<RowInput> inputs;
    for (double rho : sweep->rho_plus) {
        if (!(rho > 0.0)) throw PreconditionError("rho+ values must be positive");
        inputs.push_back({sweep->mu, rho});
    }
    return run_rows(spec, inputs);
}

}  // namespace qhd
