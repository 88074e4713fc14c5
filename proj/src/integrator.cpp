#include "qhd/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <utility>

#include "qhd/errors.hpp"

namespace qhd {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// difference between the 5th and embedded 4th order weights
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense output
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

// PI controller constants
constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;
constexpr double kMinShrink = 0.2;
constexpr double kMaxGrow = 10.0;

State axpy(const State& x, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = x;
    for (const auto& [w, k] : terms) {
        out[0] += h * w * (*k)[0];
        out[1] += h * w * (*k)[1];
    }
    return out;
}

bool finite(const State& x) { return std::isfinite(x[0]) && std::isfinite(x[1]); }

double error_norm(const State& err, const State& x_old, const State& x_new, double tol) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double scale = tol + tol * std::max(std::abs(x_old[i]), std::abs(x_new[i]));
        const double r = err[i] / scale;
        sum += r * r;
    }
    return std::sqrt(sum / 2.0);
}

struct Dense {
    State r1, r2, r3, r4, r5;

    State at(double theta) const {
        const double t1 = 1.0 - theta;
        State out{};
        for (int i = 0; i < 2; ++i) {
            out[i] = r1[i] + theta * (r2[i] + t1 * (r3[i] + theta * (r4[i] + t1 * r5[i])));
        }
        return out;
    }
};

double initial_step(const Rhs& rhs, double y0, const State& x0, const State& f0, double tol,
                    double span) {
    auto scaled = [&](const State& v) {
        double sum = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double r = v[i] / (tol + tol * std::abs(x0[i]));
            sum += r * r;
        }
        return std::sqrt(sum / 2.0);
    };
    const double dx = scaled(x0);
    const double df = scaled(f0);
    double h0 = (dx < 1e-5 || df < 1e-5) ? 1e-6 : 0.01 * dx / df;
    h0 = std::min(h0, span);
    const State x1 = axpy(x0, h0, {{1.0, &f0}});
    const State f1 = rhs(y0 + h0, x1);
    if (!finite(f1)) {
        return h0 * 1e-3;
    }
    const State diff{f1[0] - f0[0], f1[1] - f0[1]};
    const double d2 = scaled(diff) / h0;
    const double m = std::max(df, d2);
    const double h1 = m <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / m, 0.2);
    return std::min({100.0 * h0, h1, span});
}

}  // namespace

Trajectory integrate(const Rhs& rhs, double y0, const State& state0, double y_max, double tol,
                     const IntegrateOptions& opts) {
    if (!(tol > 0.0)) {
        throw PreconditionError("integration tolerance must be positive");
    }
    if (!(state0[0] > 0.0)) {
        throw VacuumCrossingError("initial P must be positive");
    }
    if (!(y_max > y0)) {
        throw PreconditionError("y_max must exceed y0");
    }

    Trajectory traj;
    traj.points.push_back({y0, state0[0], state0[1]});

    double y = y0;
    State x = state0;
    State k1 = rhs(y, x);
    if (!finite(k1)) {
        throw PreconditionError("right-hand side is not finite at the initial state");
    }
    double h = opts.initial_step > 0.0 ? opts.initial_step : initial_step(rhs, y, x, k1, tol, y_max - y0);
    double err_old = 1e-4;
    bool rejected_last = false;
    const int base_dense = std::max(0, opts.dense_per_step);

    for (long step = 0; y < y_max; ++step) {
        if (step >= opts.max_steps) {
            throw NumericalError("integration step budget exhausted");
        }
        if (h < opts.min_step) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "step size underflow (h = %.3e at y = %.6g)", h, y);
            throw StepUnderflowError(buf);
        }
        const bool last = y + h >= y_max;
        if (last) h = y_max - y;

        const State k2 = rhs(y + c2 * h, axpy(x, h, {{a21, &k1}}));
        const State k3 = rhs(y + c3 * h, axpy(x, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(y + c4 * h, axpy(x, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(y + c5 * h, axpy(x, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(y + h, axpy(x, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State x_new =
            axpy(x, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const State k7 = rhs(y + h, x_new);

        State err{};
        for (int i = 0; i < 2; ++i) {
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        }
        const double en = error_norm(err, x, x_new, tol);

        if (!std::isfinite(en) || !finite(x_new) || !finite(k7)) {
            h *= 0.25;
            rejected_last = true;
            continue;
        }

        const double fac_base = std::pow(en, kExpo);
        if (en > 1.0) {
            h /= std::min(1.0 / kMinShrink, fac_base / kSafety);
            rejected_last = true;
            continue;
        }

        // accepted
        Dense dense{};
        for (int i = 0; i < 2; ++i) {
            const double diff = x_new[i] - x[i];
            const double bspl = h * k1[i] - diff;
            dense.r1[i] = x[i];
            dense.r2[i] = diff;
            dense.r3[i] = bspl;
            dense.r4[i] = diff - h * k7[i] - bspl;
            dense.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }

        int n_dense = base_dense;
        std::vector<TrajectoryPoint> inner;
        for (int attempt = 0; attempt < 12; ++attempt) {
            inner.clear();
            double prev = x[0];
            bool spaced = true;
            for (int i = 1; i <= n_dense; ++i) {
                const double theta = static_cast<double>(i) / (n_dense + 1);
                const State xi = dense.at(theta);
                inner.push_back({y + theta * h, xi[0], xi[1]});
                spaced = spaced && std::abs(xi[0] - prev) < opts.max_dP;
                prev = xi[0];
            }
            spaced = spaced && std::abs(x_new[0] - prev) < opts.max_dP;
            if (spaced) break;
            n_dense = std::max(1, 2 * n_dense + 1);
        }

        y = last ? y_max : y + h;
        x = x_new;
        k1 = k7;
        if (x[0] < opts.vacuum_floor) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "P = %.3e fell below the vacuum floor at y = %.6g", x[0], y);
            throw VacuumCrossingError(buf);
        }
        traj.points.insert(traj.points.end(), inner.begin(), inner.end());
        traj.points.push_back({y, x[0], x[1]});
        traj.step_sizes.push_back(h);

        if (opts.stop && opts.stop(y, x)) {
            break;
        }

        double fac = fac_base / std::pow(err_old, kBeta);
        fac = std::clamp(fac / kSafety, 1.0 / kMaxGrow, 1.0 / kMinShrink);
        double h_new = h / fac;
        if (rejected_last) h_new = std::min(h_new, h);
        err_old = std::max(en, 1e-4);
        rejected_last = false;
        h = h_new;
    }
    return traj;
}

}  // namespace qhd
