#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "qhd/errors.hpp"
#include "qhd/rankine_hugoniot.hpp"

using namespace qhd;

TEST_CASE("both velocity branches satisfy the jump conditions") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dens(0.05, 4.0);
    std::uniform_real_distribution<double> speed(-3.0, 3.0);
    for (double gamma : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        for (int i = 0; i < 100; ++i) {
            const double rm = dens(rng);
            const double rp = dens(rng);
            if (std::abs(rm - rp) < 1e-3) continue;
            const double s = speed(rng);
            const auto b = rh_velocity_branches(rm, rp, s, gamma);
            CHECK(b.d > 0.0);
            for (const auto& br : {b.branch1, b.branch2}) {
                const auto r = jump_residuals({rm, br.u_minus}, {rp, br.u_plus}, s, gamma);
                CHECK(std::abs(r.mass) < 1e-12 * (1.0 + rm + rp) * (1.0 + std::abs(s) + b.d));
                CHECK(std::abs(r.bernoulli) < 1e-10 * (1.0 + b.d * b.d + std::abs(enthalpy(rm, gamma))));
            }
        }
    }
}

TEST_CASE("equal densities are degenerate") {
    CHECK_THROWS_AS(rh_velocity_branches(1.0, 1.0, 1.0, 1.4), DegenerateShockError);
    CHECK_THROWS_AS(select_admissible_branch(2.0, 2.0, 1.0, 1.0), DegenerateShockError);
}

TEST_CASE("branch selection matches the density ordering") {
    for (double gamma : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        for (double s : {-2.0, -0.5, 0.5, 2.0}) {
            const auto down = select_admissible_branch(1.5, 1.0, s, gamma);
            CHECK(down.family == LaxFamily::Lax2);
            CHECK(down.left.u == doctest::Approx(s - rh_velocity_branches(1.5, 1.0, s, gamma).d));
            const auto up = select_admissible_branch(1.0, 1.5, s, gamma);
            CHECK(up.family == LaxFamily::Lax1);
            CHECK(down.P_minus == doctest::Approx(std::sqrt(1.5)));
            CHECK(down.P_plus == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("the other branch is never a Lax shock") {
    for (double gamma : {1.0, 1.4, 3.0}) {
        const auto b = rh_velocity_branches(1.5, 1.0, 1.0, gamma);
        CHECK(lax_classify({1.5, b.branch1.u_minus}, {1.0, b.branch1.u_plus}, 1.0, gamma) ==
              LaxFamily::NotAdmissible);
        CHECK_THROWS_AS(make_shock({1.5, b.branch1.u_minus}, {1.0, b.branch1.u_plus}, 1.0, gamma),
                        NoAdmissibleProfileError);
    }
}

TEST_CASE("make_shock rejects states off the jump manifold and zero speed") {
    CHECK_THROWS_AS(make_shock({1.5, 0.0}, {1.0, 0.3}, 1.0, 1.4), NoAdmissibleProfileError);
    CHECK_THROWS_AS(select_admissible_branch(1.5, 1.0, 0.0, 1.4), NoAdmissibleProfileError);
}

TEST_CASE("sonic classification") {
    CHECK(sonic_classify({1.0, 0.5}, 1.0) == Sonic::Subsonic);
    CHECK(sonic_classify({1.0, -1.5}, 1.0) == Sonic::Supersonic);
    CHECK(sonic_classify({1.0, 1.0}, 1.0) == Sonic::Sonic);
    CHECK(std::string(to_string(Sonic::Supersonic)) == "supersonic");
}

TEST_CASE("existence hypotheses for the strong adiabatic shock") {
    const auto& f = fixtures::kStrongAdiabatic;
    const auto shock = select_admissible_branch(f.rho_minus, f.rho_plus, 1.0, f.gamma);
    const auto h = check_profile_hypotheses(shock, f.gamma);
    CHECK(h.existence_case == ExistenceCase::CaseI);
    CHECK(h.condition == SufficientCondition::SubsonicState);
    CHECK(h.right_sonic == Sonic::Subsonic);
    CHECK(h.subsonic_condition);
    CHECK_FALSE(h.signed_velocity_condition);
    CHECK(h.sign_chain_margin > 0.0);
}

TEST_CASE("mirrored shock falls in the second existence case") {
    const auto shock = select_admissible_branch(1.0, 1.5, -1.0, 5.0 / 3.0);
    const auto h = check_profile_hypotheses(shock, 5.0 / 3.0);
    CHECK(h.existence_case == ExistenceCase::CaseII);
    CHECK(h.condition == SufficientCondition::SubsonicState);
    // reflecting x maps the velocities to their negatives
    const auto ref = select_admissible_branch(1.5, 1.0, 1.0, 5.0 / 3.0);
    CHECK(shock.left.u == doctest::Approx(-ref.right.u));
    CHECK(shock.right.u == doctest::Approx(-ref.left.u));
}

TEST_CASE("supersonic right state is accepted without the subsonic condition") {
    const auto shock = select_admissible_branch(0.5, 0.05, 1.0, 1.5);
    const auto h = check_profile_hypotheses(shock, 1.5);
    CHECK(h.right_sonic == Sonic::Supersonic);
    CHECK_FALSE(h.subsonic_condition);
    CHECK(h.existence_case == ExistenceCase::CaseI);
}

TEST_CASE("wrong orientation has no profile guarantee") {
    // Lax 1 shock moving right: P- < P+ with s > 0
    const auto shock = select_admissible_branch(1.0, 1.5, 1.0, 1.4);
    try {
        check_profile_hypotheses(shock, 1.4);
        FAIL("expected NoProfileGuaranteeError");
    } catch (const NoProfileGuaranteeError& e) {
        CHECK(std::string(e.what()).find("P") != std::string::npos);
    }
}
