#pragma once

#include <algorithm>
#include <cmath>

#include "qhd/model.hpp"

namespace fixtures {

// All reference cases travel with s = 1.
struct DensityPair {
    double gamma;
    double rho_minus;
    double rho_plus;
};

inline constexpr DensityPair kStrongAdiabatic{5.0 / 3.0, 1.5, 1.0};
inline constexpr double kStrongMu[] = {4.0, 1.0, 0.5, 0.25};

inline constexpr double kVacuumGamma = 1.5;
inline constexpr double kVacuumMu = 1.2;
inline constexpr double kVacuumRhoMinus = 0.5;
inline constexpr double kVacuumRhoPlus[] = {0.4, 0.3, 0.1, 0.05};

inline double k_ref() { return std::sqrt(2.0); }

// Constants of the closed-loop portrait example.
inline constexpr qhd::ProfileConstants kLoopConstants{1.0, -3.1, 1.0};
inline constexpr double kLoopGamma = 1.5;
inline constexpr double kLoopMu = 0.3;
inline constexpr double kLoopK = 1.0;

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace fixtures
