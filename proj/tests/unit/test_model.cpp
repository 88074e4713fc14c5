#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qhd/errors.hpp"
#include "qhd/model.hpp"
#include "qhd/rankine_hugoniot.hpp"

using namespace qhd;

namespace {

double central(const std::function<double(double)>& fn, double x) {
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("fluid parameters reject non-physical values") {
    CHECK_NOTHROW(FluidParams(1.0, 0.1, 0.1));
    CHECK_THROWS_AS(FluidParams(0.9, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FluidParams(1.4, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(FluidParams(1.4, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(FluidParams(NAN, 1.0, 1.0), DomainError);
}

TEST_CASE("enthalpy switches to the logarithm inside the isothermal band") {
    CHECK(is_isothermal(1.0));
    CHECK(is_isothermal(1.0 + 5e-13));
    CHECK_FALSE(is_isothermal(1.0 + 1e-9));
    CHECK(enthalpy(2.0, 1.0) == doctest::Approx(std::log(2.0)));
    CHECK(enthalpy(2.0, 5.0 / 3.0) == doctest::Approx(2.5 * std::pow(2.0, 2.0 / 3.0)));
    CHECK(enthalpy(0.25, 3.0) == doctest::Approx(1.5 * 0.0625));
}

TEST_CASE("enthalpy derivative and sound speed agree with finite differences") {
    for (double gamma : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        for (double rho : {0.05, 0.3, 1.0, 2.7}) {
            const double fd = central([&](double r) { return enthalpy(r, gamma); }, rho);
            CHECK(enthalpy_derivative(rho, gamma) == doctest::Approx(fd).epsilon(1e-7));
            // c_s^2 = p'(rho) with p = rho^gamma
            const double dp = central([&](double r) { return std::pow(r, gamma); }, rho);
            CHECK(sound_speed(rho, gamma) * sound_speed(rho, gamma) == doctest::Approx(dp).epsilon(1e-7));
        }
    }
    CHECK(sound_speed(3.0, 1.0) == 1.0);
    CHECK_THROWS_AS(sound_speed(0.0, 1.4), DomainError);
}

TEST_CASE("profile constants follow from one end state") {
    const EndState w{1.0, -0.5};
    const auto c = profile_constants(w, 2.0, 1.4);
    CHECK(c.A == doctest::Approx(2.5));
    CHECK(c.B == doctest::Approx(2.0 * -0.5 - 0.125 - enthalpy(1.0, 1.4)));
    CHECK(c.s == 2.0);
    CHECK_THROWS_AS(profile_constants(w, 0.0, 1.4), DomainError);
    CHECK_THROWS_AS(profile_constants({-1.0, 0.0}, 1.0, 1.4), DomainError);
}

TEST_CASE("forcing vanishes at both end states of every admissible shock") {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> ratio(0.05, 0.95);
    std::uniform_real_distribution<double> dens(0.2, 3.0);
    std::uniform_real_distribution<double> speed(0.2, 3.0);
    const double gammas[] = {1.0, 1.3, 5.0 / 3.0, 2.0, 3.0};
    for (int i = 0; i < 200; ++i) {
        const double gamma = gammas[i % 5];
        const double rm = dens(rng);
        const double rp = rm * ratio(rng);
        const double s = speed(rng);
        const ShockData shock = select_admissible_branch(rm, rp, s, gamma);
        const double scale = std::abs(shock.constants.B) + shock.constants.s * shock.constants.s + 1.0;
        CHECK(std::abs(forcing(shock.P_plus, shock.constants, gamma)) < 1e-12 * scale);
        CHECK(std::abs(forcing(shock.P_minus, shock.constants, gamma)) < 1e-12 * scale);
        // the left state gives the same constants
        const auto left = profile_constants(shock.left, s, gamma);
        CHECK(fixtures::rel_diff(left.A, shock.constants.A) < 1e-12);
        CHECK(fixtures::rel_diff(left.B, shock.constants.B) < 1e-12);
    }
}

TEST_CASE("forcing derivatives match finite differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> P(0.3, 2.0);
    for (double gamma : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        const ProfileConstants c{1.3, -2.2, 0.9};
        for (int i = 0; i < 25; ++i) {
            const double x = P(rng);
            const double d1 = central([&](double p) { return forcing(p, c, gamma); }, x);
            const double d2 = central([&](double p) { return forcing_slope(p, c, gamma); }, x);
            CHECK(forcing_slope(x, c, gamma) == doctest::Approx(d1).epsilon(1e-6));
            CHECK(forcing_curvature(x, c, gamma) == doctest::Approx(d2).epsilon(1e-6));
        }
    }
}

TEST_CASE("forcing is convex in P") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> P(0.01, 10.0);
    for (double gamma : {1.0, 1.2, 2.0}) {
        for (int i = 0; i < 100; ++i) {
            CHECK(forcing_curvature(P(rng), {0.7, -1.0, 1.0}, gamma) > 0.0);
        }
    }
}

TEST_CASE("potential is an antiderivative of forcing / k^2 (quadrature oracle)") {
    using boost::math::quadrature::gauss_kronrod;
    for (double gamma : {1.0, 1.4, 3.0}) {
        const FluidParams params(gamma, 0.5, 1.7);
        const ProfileConstants c{0.8, -1.9, 1.2};
        const double k2 = params.k() * params.k();
        for (auto [a, b] : {std::pair{0.4, 1.1}, std::pair{0.9, 2.5}, std::pair{0.2, 0.35}}) {
            const double integral = gauss_kronrod<double, 61>::integrate(
                [&](double p) { return forcing(p, c, gamma) / k2; }, a, b, 5, 1e-14);
            const double diff = potential(b, c, params) - potential(a, c, params);
            CHECK(diff == doctest::Approx(integral).epsilon(1e-10));
        }
    }
}

TEST_CASE("energy functions vanish at their reference equilibria") {
    const FluidParams params(fixtures::kLoopGamma, fixtures::kLoopMu, fixtures::kLoopK);
    const auto& c = fixtures::kLoopConstants;
    CHECK(reduced_energy(1.07, 0.0, c, params, 1.07) == 0.0);
    CHECK(lyapunov(0.8, 0.0, c, params, 0.8) == 0.0);
    // H + V is independent of the point
    const double sum1 = reduced_energy(0.9, 0.1, c, params, 1.07) + lyapunov(0.9, 0.1, c, params, 0.8);
    const double sum2 = reduced_energy(0.7, -0.3, c, params, 1.07) + lyapunov(0.7, -0.3, c, params, 0.8);
    CHECK(sum1 == doctest::Approx(sum2).epsilon(1e-13));
}

TEST_CASE("velocity recovered from density") {
    const ProfileConstants c{2.0, 0.0, 3.0};
    CHECK(velocity_from_density(2.0, c) == doctest::Approx(2.5));
}

TEST_CASE("non-positive P is rejected everywhere") {
    const FluidParams params(1.4, 1.0, 1.0);
    const ProfileConstants c{1.0, -1.0, 1.0};
    CHECK_THROWS_AS(forcing(0.0, c, 1.4), DomainError);
    CHECK_THROWS_AS(forcing_slope(-1.0, c, 1.4), DomainError);
    CHECK_THROWS_AS(forcing_curvature(0.0, c, 1.0), DomainError);
    CHECK_THROWS_AS(potential(0.0, c, params), DomainError);
    CHECK_THROWS_AS(reduced_energy(0.0, 0.0, c, params, 1.0), DomainError);
    CHECK_THROWS_AS(velocity_from_density(0.0, c), DomainError);
}
