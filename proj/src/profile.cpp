#include "qhd/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qhd/errors.hpp"

namespace qhd {

ShockData shock_from_constants(const ProfileConstants& c, const FluidParams& params) {
    if (c.s == 0.0) {
        throw NoAdmissibleProfileError("wave speed s = 0 removes the dissipative term");
    }
    const RootPair roots = find_equilibria(c, params);
    const double P_plus = c.s > 0.0 ? roots.lower : roots.upper;
    const double P_minus = c.s > 0.0 ? roots.upper : roots.lower;
    const EndState left{P_minus * P_minus, velocity_from_density(P_minus, c)};
    const EndState right{P_plus * P_plus, velocity_from_density(P_plus, c)};
    return make_shock(left, right, c.s, params.gamma());
}

Profile shoot_heteroclinic(const ShockData& shock, const FluidParams& params, const ShootOptions& opts) {
    const HypothesisReport hyp = check_profile_hypotheses(shock, params.gamma());
    const bool mirrored = hyp.existence_case == ExistenceCase::CaseII;

    // Case I orientation: s > 0, orbit leaves the upper root and settles at the lower one.
    const ProfileConstants oriented{shock.constants.A, shock.constants.B, std::abs(shock.s)};
    const RootPair roots{std::min(shock.P_minus, shock.P_plus), std::max(shock.P_minus, shock.P_plus)};
    const double P_saddle = roots.upper;
    const double P_attr = roots.lower;

    const EquilibriumReport saddle = equilibrium_report(P_saddle, oriented, params);
    if (saddle.kind != EquilibriumKind::Saddle || !saddle.unstable_eigvec) {
        throw PreconditionError("upper equilibrium is not a saddle");
    }
    const double P_star = find_loop_far_end(oriented, params, roots);

    const double delta = opts.perturbation > 0.0 ? opts.perturbation : 1e-6 * P_saddle;
    const Vec2& v = *saddle.unstable_eigvec;
    const State start{P_saddle + delta * v[0], delta * v[1]};

    const double gamma = params.gamma();
    const double k2 = params.k() * params.k();
    const double friction = 2.0 * oriented.s * params.mu() / k2;
    const Rhs rhs = [&](double, const State& x) -> State {
        if (!(x[0] > 0.0)) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            return {nan, nan};
        }
        return {x[1], forcing(x[0], oriented, gamma) / k2 - friction * x[1]};
    };

    auto distance = [&](const State& x) { return std::hypot(x[0] - P_attr, x[1]); };

    int inside = 0;
    bool arrived = false;
    IntegrateOptions iopts;
    iopts.dense_per_step = opts.dense_per_step;
    iopts.max_dP = 0.01 * (P_saddle - P_star);
    iopts.stop = [&](double y, const State& x) {
        const double H = reduced_energy(x[0], x[1], oriented, params, P_saddle);
        if (H < -opts.containment_tol || x[0] > P_saddle + opts.containment_tol) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "orbit left the homoclinic region at y = %.6g (P = %.9g, Q = %.3e, H = %.3e)", y,
                          x[0], x[1], H);
            throw ContainmentError(buf);
        }
        inside = distance(x) < opts.conv_tol ? inside + 1 : 0;
        arrived = inside >= opts.sustain_steps;
        return arrived;
    };

    Trajectory traj = integrate(rhs, 0.0, start, opts.y_max, opts.tol, iopts);
    const auto& last = traj.points.back();
    const double terminal = distance({last.P, last.Q});
    if (!arrived) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "no convergence within y_max = %.6g (distance %.3e)", opts.y_max,
                      terminal);
        throw NonConvergenceError(buf, terminal);
    }

    traj.energy.reserve(traj.points.size());
    traj.lyapunov.reserve(traj.points.size());
    for (const auto& p : traj.points) {
        traj.energy.push_back(reduced_energy(p.P, p.Q, oriented, params, P_saddle));
        traj.lyapunov.push_back(lyapunov(p.P, p.Q, oriented, params, P_attr));
    }

    if (mirrored) {
        std::reverse(traj.points.begin(), traj.points.end());
        for (auto& p : traj.points) {
            p.y = -p.y;
            p.Q = -p.Q;
        }
        std::reverse(traj.step_sizes.begin(), traj.step_sizes.end());
        std::reverse(traj.energy.begin(), traj.energy.end());
        std::reverse(traj.lyapunov.begin(), traj.lyapunov.end());
    }

    Profile profile{std::move(traj),
                    shock,
                    params,
                    hyp.existence_case,
                    classify_monotonicity(shock, params),
                    0,
                    true,
                    terminal,
                    P_star};
    profile.extrema_count = count_extrema(profile);
    return profile;
}

std::vector<FieldRow> profile_fields(const Profile& profile, int stride) {
    stride = std::max(1, stride);
    const auto& pts = profile.trajectory.points;
    const auto& c = profile.shock.constants;
    std::vector<FieldRow> rows;
    rows.reserve(pts.size() / static_cast<std::size_t>(stride) + 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != pts.size()) continue;
        const auto& p = pts[i];
        rows.push_back({p.y, p.P, p.Q, p.P * p.P, velocity_from_density(p.P, c)});
    }
    return rows;
}

int count_extrema(const std::vector<double>& values, double noise_floor) {
    if (values.empty()) return 0;
    int count = 0;
    int direction = 0;
    double anchor = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double v = values[i];
        if (direction == 0) {
            if (v > anchor + noise_floor) {
                direction = 1;
                anchor = v;
            } else if (v < anchor - noise_floor) {
                direction = -1;
                anchor = v;
            }
        } else if (direction > 0) {
            if (v > anchor) {
                anchor = v;
            } else if (v < anchor - noise_floor) {
                ++count;
                direction = -1;
                anchor = v;
            }
        } else {
            if (v < anchor) {
                anchor = v;
            } else if (v > anchor + noise_floor) {
                ++count;
                direction = 1;
                anchor = v;
            }
        }
    }
    return count;
}

int count_extrema(const Profile& profile, std::optional<double> noise_floor) {
    const double floor = noise_floor.value_or(1e-8 * std::abs(profile.shock.P_minus - profile.shock.P_plus));
    std::vector<double> P;
    P.reserve(profile.trajectory.points.size());
    for (const auto& p : profile.trajectory.points) P.push_back(p.P);
    return count_extrema(P, floor);
}

}  // namespace qhd
