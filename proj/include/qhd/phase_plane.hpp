#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "qhd/model.hpp"
#include "qhd/rankine_hugoniot.hpp"

// Geometry of the planar system P' = Q, Q' = f(P)/k^2 - (2 s mu/k^2) Q.
//
// f is convex with exactly two positive roots for constants coming from a
// genuine shock. The larger root is always a saddle; the smaller one is the
// node or focus the heteroclinic orbit winds into (after reversing y when
// s < 0).

namespace qhd {

/// The two positive roots of f, lower < upper.
struct RootPair {
    double lower;
    double upper;
};

enum class EquilibriumKind { Saddle, StableNode, StableFocus, UnstableNode, UnstableFocus };
enum class Monotonicity { Monotone, Oscillatory };

const char* to_string(EquilibriumKind kind);
const char* to_string(Monotonicity m);

using Vec2 = std::array<double, 2>;

struct EquilibriumReport {
    double P_eq;
    double slope;  ///< f'(P_eq)
    std::array<std::complex<double>, 2> eigenvalues;
    std::optional<Vec2> unstable_eigvec;
    std::optional<Vec2> stable_eigvec;
    EquilibriumKind kind;
};

struct LoopSample {
    double P;
    double Q_upper;
    double Q_lower;
};

/// Zero-energy level set of the inviscid system through the saddle.
struct HomoclinicLoop {
    double P_star;    ///< far intersection with Q = 0, 0 < P_star < lower root
    double P_saddle;  ///< the upper root
    std::vector<LoopSample> samples;
};

/// Positive roots of f. Throws InvalidConstantsError when A = 0 or f has fewer than two
/// positive roots (inside `bracket_hint` when given).
RootPair find_equilibria(const ProfileConstants& c, const FluidParams& params,
                         std::optional<std::pair<double, double>> bracket_hint = std::nullopt);

/// Linearization at (P_eq, 0): eigenvalues of J = [[0, 1], [f'/k^2, -2 s mu/k^2]].
///
/// At a saddle the unstable eigenvector is returned with both components negative
/// (pointing toward decreasing P, into the loop) and the stable one with a negative
/// Q component. Throws PreconditionError when |f(P_eq)| >= 1e-6.
EquilibriumReport equilibrium_report(double P_eq, const ProfileConstants& c, const FluidParams& params);

/// The equilibrium the profile approaches as y -> +inf (Case I) or leaves as y -> -inf
/// (Case II): P+ and P- respectively. It is the lower root in both cases.
double attracting_root(const ShockData& shock);

/// Oscillatory iff |s| mu / k < sqrt(-f'(P_attr)), i.e. the attracting equilibrium of
/// the y-oriented system is a focus.
Monotonicity classify_monotonicity(const ShockData& shock, const FluidParams& params);

/// The unique zero of f' (minimum of f), strictly between the two roots.
double find_forcing_minimum(const ProfileConstants& c, const FluidParams& params, const RootPair& roots);

/// P_star in (0, lower) with F(P_star) = F(upper). Throws BracketError when no sign change
/// of F - F(upper) is found scanning lower * 2^-j, j = 1..40.
double find_loop_far_end(const ProfileConstants& c, const FluidParams& params, const RootPair& roots);

/// Samples both branches Q = +-sqrt(2 (F(P) - F(upper))) on n uniformly spaced P in
/// [P_star, upper]. Throws InvalidConstantsError on a radicand below -1e-12.
HomoclinicLoop homoclinic_loop(const ProfileConstants& c, const FluidParams& params, int n_samples);

}  // namespace qhd
