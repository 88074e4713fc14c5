#include "qhd/model.hpp"

#include <cmath>
#include <string>

#include "qhd/errors.hpp"

namespace qhd {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0)) {
        throw DomainError(std::string(what) + " must be positive, got " + std::to_string(value));
    }
}

}  // namespace

FluidParams::FluidParams(double gamma, double mu, double k) : gamma_(gamma), mu_(mu), k_(k) {
    if (!(gamma >= 1.0 - kIsothermalBand) || !std::isfinite(gamma)) {
        throw DomainError("gamma must be >= 1, got " + std::to_string(gamma));
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw DomainError("mu must be positive, got " + std::to_string(mu));
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("k must be positive, got " + std::to_string(k));
    }
}

double enthalpy(double rho, double gamma) {
    require_positive(rho, "density");
    if (is_isothermal(gamma)) {
        return std::log(rho);
    }
    return gamma / (gamma - 1.0) * std::pow(rho, gamma - 1.0);
}

double enthalpy_derivative(double rho, double gamma) {
    require_positive(rho, "density");
    if (is_isothermal(gamma)) {
        return 1.0 / rho;
    }
    return gamma * std::pow(rho, gamma - 2.0);
}

double sound_speed(double rho, double gamma) {
    require_positive(rho, "density");
    if (is_isothermal(gamma)) {
        return 1.0;
    }
    return std::sqrt(gamma * std::pow(rho, gamma - 1.0));
}

ProfileConstants profile_constants(const EndState& state, double s, double gamma) {
    require_positive(state.rho, "density");
    if (s == 0.0) {
        throw DomainError("wave speed must be nonzero");
    }
    const double A = (s - state.u) * state.rho;
    const double B = s * state.u - 0.5 * state.u * state.u - enthalpy(state.rho, gamma);
    return {A, B, s};
}

double forcing(double P, const ProfileConstants& c, double gamma) {
    require_positive(P, "P");
    const double P2 = P * P;
    const double bracket = 0.5 * (c.A * c.A / (P2 * P2) - c.s * c.s) + enthalpy(P2, gamma) + c.B;
    return bracket * P;
}

double forcing_slope(double P, const ProfileConstants& c, double gamma) {
    require_positive(P, "P");
    const double P2 = P * P;
    const double flux = -1.5 * c.A * c.A / (P2 * P2);
    const double tail = c.B - 0.5 * c.s * c.s;
    if (is_isothermal(gamma)) {
        return flux + std::log(P2) + 2.0 + tail;
    }
    return flux + gamma * (2.0 * gamma - 1.0) / (gamma - 1.0) * std::pow(P, 2.0 * (gamma - 1.0)) + tail;
}

double forcing_curvature(double P, const ProfileConstants& c, double gamma) {
    require_positive(P, "P");
    const double flux = 6.0 * c.A * c.A / std::pow(P, 5);
    if (is_isothermal(gamma)) {
        return flux + 2.0 / P;
    }
    return flux + 2.0 * gamma * (2.0 * gamma - 1.0) * std::pow(P, 2.0 * gamma - 3.0);
}

double potential(double P, const ProfileConstants& c, const FluidParams& params) {
    require_positive(P, "P");
    const double k2 = params.k() * params.k();
    const double P2 = P * P;
    const double A2 = c.A * c.A;
    if (is_isothermal(params.gamma())) {
        return (-A2 / (4.0 * P2) + 0.5 * (c.B - 0.5 * c.s * c.s - 1.0) * P2 + 0.5 * P2 * std::log(P2)) / k2;
    }
    const double g = params.gamma();
    return (-A2 / P2 + (2.0 * c.B - c.s * c.s) * P2 + 2.0 / (g - 1.0) * std::pow(P, 2.0 * g)) / (4.0 * k2);
}

double reduced_energy(double P, double Q, const ProfileConstants& c, const FluidParams& params,
                      double P_saddle) {
    return potential(P, c, params) - 0.5 * Q * Q - potential(P_saddle, c, params);
}

double lyapunov(double P, double Q, const ProfileConstants& c, const FluidParams& params,
                double P_attractor) {
    return 0.5 * Q * Q - potential(P, c, params) + potential(P_attractor, c, params);
}

double velocity_from_density(double P, const ProfileConstants& c) {
    require_positive(P, "P");
    return c.s - c.A / (P * P);
}

}  // namespace qhd
