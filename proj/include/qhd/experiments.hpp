#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhd/profile.hpp"

namespace qhd {

/// Viscosity varies, both densities fixed.
struct MuSweep {
    double rho_plus;
    std::vector<double> mu;
};

/// Right density varies, viscosity fixed.
struct RhoPlusSweep {
    double mu;
    std::vector<double> rho_plus;
};

struct SweepBase {
    double gamma;
    double k;
    double s;
    double rho_minus;
};

struct SweepSpec {
    SweepBase base;
    std::variant<MuSweep, RhoPlusSweep> varying;
    ShootOptions solver_opts;
};

struct SweepRow {
    double mu;
    double rho_plus;
    double mu_over_k;
    double u_minus;
    double u_plus;
    double sqrt_neg_slope;      ///< sqrt(-f'(P_attr)), NaN when f' >= 0
    double sound_speed_right;   ///< c_s(rho+)
    Sonic right_sonic;
    std::optional<Monotonicity> classification;
    std::array<std::complex<double>, 2> eigenvalues;  ///< at the attracting equilibrium
    int extrema_count;
    bool converged;
    double terminal_error;
    std::string error;  ///< empty on success
};

struct SweepReport {
    std::vector<SweepRow> rows;  ///< input order
};

struct SweepResult {
    SweepReport report;
    std::vector<std::optional<Profile>> profiles;  ///< aligned with report.rows
};

/// gamma = 5/3, k = sqrt(2), s = 1, rho- = 1.5, rho+ = 1.0, mu = ratio * k for
/// ratios 2.83, 0.71, 0.35, 0.18 reconstructed as mu = 4, 1, 0.5, 0.25.
SweepSpec viscosity_sweep_preset();

/// gamma = 3/2, mu = 1.2, k = sqrt(2), s = 1, rho- = 0.5, rho+ in {0.4, 0.3, 0.1, 0.05}.
SweepSpec vacuum_sweep_preset();

/// Runs one row per mu. Row failures are recorded, never thrown. Rows run concurrently.
/// Throws PreconditionError when spec.varying is not MuSweep or a list is empty/non-positive.
SweepResult sweep_viscosity(const SweepSpec& spec);

/// Runs one row per rho+. Same error policy as sweep_viscosity.
SweepResult sweep_vacuum(const SweepSpec& spec);

}  // namespace qhd
