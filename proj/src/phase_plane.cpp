#include "qhd/phase_plane.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qhd/errors.hpp"
#include "qhd/roots.hpp"

namespace qhd {

namespace {

constexpr double kRootTol = 1e-12;
constexpr double kEquilibriumResidual = 1e-6;
constexpr double kRadicandSlack = 1e-12;
constexpr int kMaxScan = 200;

Vec2 normalized(Vec2 v) {
    const double n = std::hypot(v[0], v[1]);
    return {v[0] / n, v[1] / n};
}

// Locates the sign change of f' by geometric scanning from P = 1.
double slope_zero(const ProfileConstants& c, double gamma) {
    auto slope = [&](double P) { return forcing_slope(P, c, gamma); };
    auto curv = [&](double P) { return forcing_curvature(P, c, gamma); };
    double lo = 1.0;
    double hi = 1.0;
    if (slope(1.0) < 0.0) {
        for (int j = 0; j < kMaxScan && slope(hi) < 0.0; ++j) hi *= 2.0;
        lo = hi / 2.0;
    } else {
        for (int j = 0; j < kMaxScan && slope(lo) >= 0.0; ++j) lo /= 2.0;
        hi = lo * 2.0;
    }
    return roots::newton_bisect(slope, curv, lo, hi, kRootTol * lo);
}

}  // namespace

const char* to_string(EquilibriumKind kind) {
    switch (kind) {
        case EquilibriumKind::Saddle: return "saddle";
        case EquilibriumKind::StableNode: return "stable-node";
        case EquilibriumKind::StableFocus: return "stable-focus";
        case EquilibriumKind::UnstableNode: return "unstable-node";
        case EquilibriumKind::UnstableFocus: return "unstable-focus";
    }
    return "?";
}

const char* to_string(Monotonicity m) {
    return m == Monotonicity::Monotone ? "monotone" : "oscillatory";
}

RootPair find_equilibria(const ProfileConstants& c, const FluidParams& params,
                         std::optional<std::pair<double, double>> bracket_hint) {
    if (c.A == 0.0) {
        throw InvalidConstantsError("A = 0: constant state, no shock");
    }
    const double gamma = params.gamma();
    auto f = [&](double P) { return forcing(P, c, gamma); };
    auto df = [&](double P) { return forcing_slope(P, c, gamma); };

    const double P0 = slope_zero(c, gamma);
    if (!(f(P0) < 0.0)) {
        throw InvalidConstantsError("f has no negative minimum, fewer than two positive roots");
    }

    double lo = P0;
    double hi = P0;
    if (bracket_hint) {
        lo = bracket_hint->first;
        hi = bracket_hint->second;
        if (!(lo > 0.0 && lo < P0 && P0 < hi) || f(lo) <= 0.0 || f(hi) <= 0.0) {
            throw InvalidConstantsError("bracket hint does not enclose two roots of f");
        }
    } else {
        for (int j = 0; j < kMaxScan && f(lo) <= 0.0; ++j) lo /= 2.0;
        for (int j = 0; j < kMaxScan && f(hi) <= 0.0; ++j) hi *= 2.0;
        if (f(lo) <= 0.0 || f(hi) <= 0.0) {
            throw InvalidConstantsError("could not bracket both roots of f");
        }
    }
    const double lower = roots::newton_bisect(f, df, lo, P0, kRootTol);
    const double upper = roots::newton_bisect(f, df, P0, hi, kRootTol);
    return {lower, upper};
}

EquilibriumReport equilibrium_report(double P_eq, const ProfileConstants& c, const FluidParams& params) {
    const double residual = forcing(P_eq, c, params.gamma());
    if (!(std::abs(residual) < kEquilibriumResidual)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "P = %.17g is not an equilibrium (f = %.3e)", P_eq, residual);
        throw PreconditionError(buf);
    }
    const double k2 = params.k() * params.k();
    const double damping = c.s * params.mu();
    const double slope = forcing_slope(P_eq, c, params.gamma());
    const double disc = k2 * slope + damping * damping;

    EquilibriumReport report{};
    report.P_eq = P_eq;
    report.slope = slope;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        report.eigenvalues = {std::complex<double>((-damping + root) / k2, 0.0),
                              std::complex<double>((-damping - root) / k2, 0.0)};
    } else {
        const double root = std::sqrt(-disc);
        report.eigenvalues = {std::complex<double>(-damping / k2, root / k2),
                              std::complex<double>(-damping / k2, -root / k2)};
    }

    if (slope > 0.0) {
        report.kind = EquilibriumKind::Saddle;
        const double root = std::sqrt(disc);
        report.unstable_eigvec = normalized({-(damping + root) / slope, -1.0});
        report.stable_eigvec = normalized({(-damping + root) / slope, -1.0});
    } else {
        const bool focus = disc < 0.0;
        if (c.s > 0.0) {
            report.kind = focus ? EquilibriumKind::StableFocus : EquilibriumKind::StableNode;
        } else {
            report.kind = focus ? EquilibriumKind::UnstableFocus : EquilibriumKind::UnstableNode;
        }
    }
    return report;
}

double attracting_root(const ShockData& shock) {
    return std::min(shock.P_minus, shock.P_plus);
}

Monotonicity classify_monotonicity(const ShockData& shock, const FluidParams& params) {
    const auto hyp = check_profile_hypotheses(shock, params.gamma());
    const double P_attr = hyp.existence_case == ExistenceCase::CaseI ? shock.P_plus : shock.P_minus;
    const double slope = forcing_slope(P_attr, shock.constants, params.gamma());
    const double damping = std::abs(shock.s) * params.mu() / params.k();
    if (slope < 0.0 && damping < std::sqrt(-slope)) {
        return Monotonicity::Oscillatory;
    }
    return Monotonicity::Monotone;
}

double find_forcing_minimum(const ProfileConstants& c, const FluidParams& params, const RootPair& roots) {
    auto slope = [&](double P) { return forcing_slope(P, c, params.gamma()); };
    auto curv = [&](double P) { return forcing_curvature(P, c, params.gamma()); };
    try {
        return roots::newton_bisect(slope, curv, roots.lower, roots.upper, kRootTol);
    } catch (const BracketError& e) {
        throw NumericalError(std::string("f' does not change sign between the roots: ") + e.what());
    }
}

double find_loop_far_end(const ProfileConstants& c, const FluidParams& params, const RootPair& roots) {
    const double F_saddle = potential(roots.upper, c, params);
    const double k2 = params.k() * params.k();
    auto gap = [&](double P) { return potential(P, c, params) - F_saddle; };
    auto dgap = [&](double P) { return forcing(P, c, params.gamma()) / k2; };

    double hi = roots.lower;
    for (int j = 1; j <= 40; ++j) {
        const double lo = roots.lower * std::ldexp(1.0, -j);
        if (gap(lo) < 0.0) {
            return roots::newton_bisect(gap, dgap, lo, hi, kRootTol * lo);
        }
        hi = lo;
    }
    throw BracketError("loop far end not bracketed down to P = lower * 2^-40");
}

HomoclinicLoop homoclinic_loop(const ProfileConstants& c, const FluidParams& params, int n_samples) {
    if (n_samples < 2) {
        throw PreconditionError("homoclinic loop needs at least two samples");
    }
    const RootPair roots = find_equilibria(c, params);
    HomoclinicLoop loop{};
    loop.P_saddle = roots.upper;
    loop.P_star = find_loop_far_end(c, params, roots);

    const double F_saddle = potential(roots.upper, c, params);
    const double span = loop.P_saddle - loop.P_star;
    loop.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        double P = loop.P_star + span * i / (n_samples - 1);
        if (i == n_samples - 1) P = loop.P_saddle;
        double radicand = 2.0 * (potential(P, c, params) - F_saddle);
        if (i == 0 || i == n_samples - 1) {
            radicand = 0.0;
        } else if (radicand < 0.0) {
            if (radicand < -kRadicandSlack) {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "negative loop radicand %.3e at P = %.17g", radicand, P);
                throw InvalidConstantsError(buf);
            }
            radicand = 0.0;
        }
        const double Q = std::sqrt(radicand);
        loop.samples.push_back({P, Q, -Q});
    }
    return loop;
}

}  // namespace qhd
