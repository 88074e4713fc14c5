#pragma once

// Closed-form thermodynamics and the scalar functions that drive the
// traveling-wave equation
//
//     P'' = f(P)/k^2 - (2 s mu / k^2) P',     rho = P^2,  u = s - A/P^2
//
// for the pressure law p = rho^gamma.

namespace qhd {

/// gamma within this distance of 1 selects the isothermal (logarithmic) enthalpy.
inline constexpr double kIsothermalBand = 1e-12;

inline bool is_isothermal(double gamma) noexcept {
    return gamma - 1.0 < kIsothermalBand && 1.0 - gamma < kIsothermalBand;
}

/// Adiabatic exponent, viscosity and dispersion coefficients.
class FluidParams {
public:
    /// Throws DomainError unless gamma >= 1, mu > 0 and k > 0.
    FluidParams(double gamma, double mu, double k);

    double gamma() const noexcept { return gamma_; }
    double mu() const noexcept { return mu_; }
    double k() const noexcept { return k_; }

private:
    double gamma_;
    double mu_;
    double k_;
};

/// Density and velocity of a constant state at y = -inf or y = +inf.
struct EndState {
    double rho;
    double u;
};

/// Mass-flux constant A, Bernoulli constant B and wave speed s.
struct ProfileConstants {
    double A;
    double B;
    double s;
};

/// h(rho): ln(rho) for gamma = 1, gamma/(gamma-1) rho^(gamma-1) otherwise.
double enthalpy(double rho, double gamma);

/// h'(rho) = gamma rho^(gamma-2) (1/rho when isothermal).
double enthalpy_derivative(double rho, double gamma);

/// c_s(rho) = sqrt(rho h'(rho)).
double sound_speed(double rho, double gamma);

/// A = (s - u) rho, B = s u - u^2/2 - h(rho). Throws DomainError when s == 0 or rho <= 0.
ProfileConstants profile_constants(const EndState& state, double s, double gamma);

// The forcing f(P) = (A^2/(2P^4) - s^2/2 + h(P^2) + B) P and its first two
// derivatives. All throw DomainError for P <= 0.
double forcing(double P, const ProfileConstants& c, double gamma);
double forcing_slope(double P, const ProfileConstants& c, double gamma);
double forcing_curvature(double P, const ProfileConstants& c, double gamma);

/// Closed-form antiderivative F with F'(P) = f(P)/k^2. Diverges to -inf as P -> 0+.
double potential(double P, const ProfileConstants& c, const FluidParams& params);

/// Conserved energy of the inviscid system, H = F(P) - Q^2/2 - F(P_saddle).
///
/// `P_saddle` is the equilibrium the homoclinic loop passes through
/// (P- for a wave with s > 0).
double reduced_energy(double P, double Q, const ProfileConstants& c, const FluidParams& params,
                      double P_saddle);

/// V = Q^2/2 - F(P) + F(P_attractor). Non-increasing along the viscous flow when s > 0.
double lyapunov(double P, double Q, const ProfileConstants& c, const FluidParams& params,
                double P_attractor);

/// U(P) = s - A/P^2.
double velocity_from_density(double P, const ProfileConstants& c);

}  // namespace qhd
