#pragma once

#include <array>
#include <functional>
#include <limits>
#include <vector>

namespace qhd {

/// (P, Q) with Q = P'.
using State = std::array<double, 2>;

/// Right-hand side of a planar autonomous-or-not system x' = rhs(y, x).
/// Returning non-finite components marks the point as outside the domain;
/// the step is then rejected and retried with a smaller step size.
using Rhs = std::function<State(double y, const State& x)>;

struct TrajectoryPoint {
    double y;
    double P;
    double Q;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    std::vector<double> step_sizes;  ///< accepted steps, in order
    std::vector<double> energy;      ///< H per point; filled by the shooting driver
    std::vector<double> lyapunov;    ///< V per point; filled by the shooting driver
};

struct IntegrateOptions {
    /// Interior dense-output samples emitted per accepted step.
    int dense_per_step = 4;
    /// Upper bound on |P_{i+1} - P_i| between consecutive emitted points.
    double max_dP = std::numeric_limits<double>::infinity();
    /// An accepted state with P below this aborts with VacuumCrossingError.
    double vacuum_floor = 1e-10;
    double min_step = 1e-14;
    /// 0 selects an automatic starting step.
    double initial_step = 0.0;
    long max_steps = 10'000'000;
    /// Called after each accepted step with the step's end point; returning true stops.
    std::function<bool(double y, const State& x)> stop;
};

/// Dormand-Prince 5(4) with PI step-size control and quartic dense output.
///
/// Local error per step is kept below `tol` in the mixed norm
/// |err_i| / (tol + tol * |x_i|). Integration runs until `y_max` or until
/// `opts.stop` returns true. The first point is (y0, state0).
///
/// Throws VacuumCrossingError, StepUnderflowError (step below opts.min_step), or
/// NumericalError when the step budget is exhausted.
Trajectory integrate(const Rhs& rhs, double y0, const State& state0, double y_max, double tol,
                     const IntegrateOptions& opts = {});

}  // namespace qhd
