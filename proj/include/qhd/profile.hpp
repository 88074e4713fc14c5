#pragma once

#include <optional>
#include <vector>

#include "qhd/integrator.hpp"
#include "qhd/model.hpp"
#include "qhd/phase_plane.hpp"
#include "qhd/rankine_hugoniot.hpp"

// Shooting from the saddle along its unstable manifold to the heteroclinic
// traveling-wave profile.

namespace qhd {

struct ShootOptions {
    /// Distance of the start point from the saddle; <= 0 selects 1e-6 * P_saddle.
    double perturbation = 0.0;
    /// Distance in (P, Q) to the attracting equilibrium that counts as arrived.
    double conv_tol = 1e-6;
    /// Number of consecutive accepted steps that must stay within conv_tol.
    int sustain_steps = 3;
    double y_max = 1e4;
    /// Local error tolerance handed to the integrator.
    double tol = 1e-10;
    /// Allowed excursion below H = 0 (or beyond the saddle in P) before the run is aborted.
    double containment_tol = 1e-7;
    int dense_per_step = 4;
};

struct Profile {
    Trajectory trajectory;  ///< samples in the physical variable y, increasing
    ShockData shock;
    FluidParams params;
    ExistenceCase existence_case;
    Monotonicity classification;
    int extrema_count;
    bool converged;
    double terminal_error;
    double P_star;  ///< far end of the confining homoclinic loop
};

/// ShockData for constants given directly: the roots of f become P+ and P- (P+ < P- for
/// s > 0, P- < P+ for s < 0) and velocities follow from U = s - A/P^2.
ShockData shock_from_constants(const ProfileConstants& c, const FluidParams& params);

/// Integrates from the saddle to the attracting equilibrium.
///
/// Case II (s < 0) is solved as Case I of the system with y -> -y, s -> -s and the
/// samples are then reversed, so the returned trajectory always runs from the
/// left end state at small y to the right end state at large y. Energy and
/// Lyapunov monitors are measured in the Case I orientation (H from the saddle,
/// V from the attractor).
///
/// Throws NonConvergenceError when y_max is reached first and ContainmentError when
/// the orbit leaves the homoclinic region by more than opts.containment_tol.
Profile shoot_heteroclinic(const ShockData& shock, const FluidParams& params, const ShootOptions& opts = {});

struct FieldRow {
    double y;
    double P;
    double Q;
    double rho;
    double u;
};

/// (y, P, Q, rho = P^2, u = s - A/P^2) for every `stride`-th sample (last sample always kept).
std::vector<FieldRow> profile_fields(const Profile& profile, int stride = 1);

/// Strict local extrema of P(y) whose swing exceeds `noise_floor` (hysteresis count).
/// Defaults to 1e-8 * |P- - P+|.
int count_extrema(const Profile& profile, std::optional<double> noise_floor = std::nullopt);

/// Same count on a raw sequence.
int count_extrema(const std::vector<double>& values, double noise_floor);

}  // namespace qhd
