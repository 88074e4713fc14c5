#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qhd/errors.hpp"
#include "qhd/profile.hpp"

using namespace qhd;

namespace {

Profile strong_profile(double mu, double s = 1.0) {
    const auto& f = fixtures::kStrongAdiabatic;
    const auto shock = s > 0 ? select_admissible_branch(f.rho_minus, f.rho_plus, s, f.gamma)
                             : select_admissible_branch(f.rho_plus, f.rho_minus, s, f.gamma);
    return shoot_heteroclinic(shock, FluidParams(f.gamma, mu, fixtures::k_ref()));
}

}  // namespace

TEST_CASE("profile runs from the left to the right end state") {
    const Profile p = strong_profile(1.0);
    REQUIRE(p.converged);
    CHECK(p.terminal_error < 1e-6);
    CHECK(p.existence_case == ExistenceCase::CaseI);
    CHECK(p.classification == Monotonicity::Oscillatory);
    const auto rows = profile_fields(p);
    CHECK(rows.front().rho == doctest::Approx(1.5).epsilon(1e-5));
    CHECK(rows.back().rho == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rows.back().u == doctest::Approx(p.shock.right.u).epsilon(1e-5));
    CHECK(rows.front().u == doctest::Approx(p.shock.left.u).epsilon(1e-5));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].y > rows[i - 1].y);
    CHECK(p.P_star > 0.0);
    CHECK(p.P_star < p.shock.P_plus);
}

TEST_CASE("every sample stays inside the homoclinic loop") {
    const Profile p = strong_profile(0.25);
    for (const auto& pt : p.trajectory.points) {
        CHECK(pt.P >= p.P_star);
        CHECK(pt.P <= p.shock.P_minus + 1e-7);
    }
}

TEST_CASE("energy rises and the Lyapunov function falls along random profiles") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ratio(0.2, 0.9);
    std::uniform_real_distribution<double> visc(0.1, 3.0);
    for (double gamma : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        for (int i = 0; i < 4; ++i) {
            const auto shock = select_admissible_branch(1.0, ratio(rng), 1.0, gamma);
            const FluidParams params(gamma, visc(rng), 1.0);
            const Profile p = shoot_heteroclinic(shock, params);
            REQUIRE(p.converged);
            const auto& H = p.trajectory.energy;
            const auto& V = p.trajectory.lyapunov;
            REQUIRE(H.size() == p.trajectory.points.size());
            for (std::size_t j = 0; j < H.size(); ++j) {
                CHECK(H[j] >= -1e-7);
                if (j) {
                    CHECK(H[j] >= H[j - 1] - 1e-7);
                    CHECK(V[j] <= V[j - 1] + 1e-7);
                }
            }
        }
    }
}

TEST_CASE("extrema count grows as viscosity drops") {
    int last = -1;
    for (double mu : fixtures::kStrongMu) {
        const int n = strong_profile(mu).extrema_count;
        CHECK(n >= last);
        last = n;
    }
    CHECK(strong_profile(4.0).extrema_count == 0);
    CHECK(last > 10);
}

TEST_CASE("negative speed reuses the mirrored computation") {
    const Profile right = strong_profile(0.5);
    const Profile left = strong_profile(0.5, -1.0);
    CHECK(left.existence_case == ExistenceCase::CaseII);
    REQUIRE(left.trajectory.points.size() == right.trajectory.points.size());
    const auto& a = left.trajectory.points;
    const auto& b = right.trajectory.points;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(a[i].P == doctest::Approx(b[n - 1 - i].P).epsilon(1e-12));
        CHECK(a[i].Q == doctest::Approx(-b[n - 1 - i].Q).epsilon(1e-12));
    }
    // Q is dP/dy in the returned frame
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (a[i + 1].P > a[i].P + 1e-9) CHECK(a[i].Q + a[i + 1].Q > -1e-9);
    }
}

TEST_CASE("constants input orders the roots by speed sign") {
    const FluidParams params(fixtures::kLoopGamma, fixtures::kLoopMu, fixtures::kLoopK);
    const ShockData fwd = shock_from_constants(fixtures::kLoopConstants, params);
    CHECK(fwd.P_plus < fwd.P_minus);
    const ProfileConstants back{-1.0, -3.1, -1.0};
    const ShockData rev = shock_from_constants(back, params);
    CHECK(rev.P_minus < rev.P_plus);
    const Profile p = shoot_heteroclinic(fwd, params);
    CHECK(p.converged);
    CHECK(p.extrema_count > 5);
}

TEST_CASE("shooting failures surface as exceptions") {
    const auto& f = fixtures::kStrongAdiabatic;
    const auto shock = select_admissible_branch(f.rho_minus, f.rho_plus, 1.0, f.gamma);
    ShootOptions opts;
    opts.y_max = 5.0;
    try {
        shoot_heteroclinic(shock, FluidParams(f.gamma, 1.0, fixtures::k_ref()), opts);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.terminal_error() > 1e-6);
    }
    const auto wrong = select_admissible_branch(1.0, 1.5, 1.0, 1.4);
    CHECK_THROWS_AS(shoot_heteroclinic(wrong, FluidParams(1.4, 1.0, 1.0)), NoProfileGuaranteeError);
}

TEST_CASE("profile fields honour the stride and keep the last sample") {
    const Profile p = strong_profile(1.0);
    const auto all = profile_fields(p);
    const auto some = profile_fields(p, 7);
    CHECK(some.size() == (all.size() - 1) / 7 + 1 + ((all.size() - 1) % 7 ? 1 : 0));
    CHECK(some.back().y == all.back().y);
    CHECK(some[1].y == all[7].y);
}

TEST_CASE("extrema counting with hysteresis") {
    CHECK(count_extrema(std::vector<double>{1, 2, 3, 4}, 0.0) == 0);
    CHECK(count_extrema(std::vector<double>{0, 1, 0, 1, 0}, 0.1) == 3);
    // wiggles below the floor are ignored
    CHECK(count_extrema(std::vector<double>{0, 1, 0.99, 1.0, 0}, 0.1) == 1);
    std::vector<double> damped;
    for (int i = 0; i < 2000; ++i) damped.push_back(std::exp(-0.01 * i) * std::cos(0.1 * i));
    const int n = count_extrema(damped, 1e-6);
    CHECK(n >= 40);
    CHECK(n <= 64);
}
