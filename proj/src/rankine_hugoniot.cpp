#include "qhd/rankine_hugoniot.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qhd/errors.hpp"

namespace qhd {

namespace {

constexpr double kJumpTolerance = 1e-9;
constexpr double kSonicBand = 1e-12;

std::string format(const char* fmt, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

}  // namespace

const char* to_string(LaxFamily family) {
    switch (family) {
        case LaxFamily::Lax1: return "lax1";
        case LaxFamily::Lax2: return "lax2";
        case LaxFamily::NotAdmissible: return "not-admissible";
    }
    return "?";
}

const char* to_string(Sonic sonic) {
    switch (sonic) {
        case Sonic::Subsonic: return "subsonic";
        case Sonic::Supersonic: return "supersonic";
        case Sonic::Sonic: return "sonic";
    }
    return "?";
}

const char* to_string(ExistenceCase c) {
    return c == ExistenceCase::CaseI ? "case-i" : "case-ii";
}

const char* to_string(SufficientCondition c) {
    switch (c) {
        case SufficientCondition::SubsonicState: return "subsonic-state";
        case SufficientCondition::SignedVelocity: return "signed-velocity";
        case SufficientCondition::HypothesesOnly: return "hypotheses-only";
    }
    return "?";
}

JumpResiduals jump_residuals(const EndState& left, const EndState& right, double s, double gamma) {
    const double mass = s * (right.rho - left.rho) - (right.rho * right.u - left.rho * left.u);
    const double bern_right = 0.5 * right.u * right.u + enthalpy(right.rho, gamma);
    const double bern_left = 0.5 * left.u * left.u + enthalpy(left.rho, gamma);
    const double bernoulli = s * (right.u - left.u) - (bern_right - bern_left);
    return {mass, bernoulli};
}

VelocityBranches rh_velocity_branches(double rho_minus, double rho_plus, double s, double gamma) {
    if (!(rho_minus > 0.0) || !(rho_plus > 0.0)) {
        throw DomainError("densities must be positive");
    }
    if (rho_minus == rho_plus) {
        throw DegenerateShockError("equal end-state densities admit no shock");
    }
    const double ratio = 2.0 * (enthalpy(rho_plus, gamma) - enthalpy(rho_minus, gamma)) /
                         (rho_plus * rho_plus - rho_minus * rho_minus);
    const double d = rho_plus * std::sqrt(ratio);
    const double scale = rho_minus / rho_plus;
    return {d, {s + d, s + scale * d}, {s - d, s - scale * d}};
}

LaxFamily lax_classify(const EndState& left, const EndState& right, double s, double gamma) {
    const double cl = sound_speed(left.rho, gamma);
    const double cr = sound_speed(right.rho, gamma);
    if (right.u - cr < s && s < left.u - cl) {
        return LaxFamily::Lax1;
    }
    if (right.u + cr < s && s < left.u + cl) {
        return LaxFamily::Lax2;
    }
    return LaxFamily::NotAdmissible;
}

Sonic sonic_classify(const EndState& state, double gamma) {
    const double gap = std::abs(state.u) - sound_speed(state.rho, gamma);
    if (std::abs(gap) <= kSonicBand) {
        return Sonic::Sonic;
    }
    return gap > 0.0 ? Sonic::Supersonic : Sonic::Subsonic;
}

ShockData make_shock(const EndState& left, const EndState& right, double s, double gamma) {
    if (!(left.rho > 0.0) || !(right.rho > 0.0)) {
        throw DomainError("densities must be positive");
    }
    if (left.rho == right.rho) {
        throw DegenerateShockError("equal end-state densities admit no shock");
    }
    if (s == 0.0) {
        throw NoAdmissibleProfileError("wave speed s = 0 removes the dissipative term");
    }
    const auto res = jump_residuals(left, right, s, gamma);
    if (std::abs(res.mass) > kJumpTolerance || std::abs(res.bernoulli) > kJumpTolerance) {
        throw NoAdmissibleProfileError(
            format("end states violate the jump conditions (mass %.3e, bernoulli %.3e)", res.mass,
                   res.bernoulli));
    }
    const LaxFamily family = lax_classify(left, right, s, gamma);
    if (family == LaxFamily::NotAdmissible) {
        throw NoAdmissibleProfileError("discontinuity is not a Lax shock");
    }
    return {left,
            right,
            s,
            family,
            profile_constants(right, s, gamma),
            std::sqrt(left.rho),
            std::sqrt(right.rho)};
}

ShockData select_admissible_branch(double rho_minus, double rho_plus, double s, double gamma) {
    if (s == 0.0) {
        throw NoAdmissibleProfileError("wave speed s = 0 removes the dissipative term");
    }
    const auto branches = rh_velocity_branches(rho_minus, rho_plus, s, gamma);
    const bool compressive_right = rho_plus < rho_minus;
    const VelocityBranch& b = compressive_right ? branches.branch2 : branches.branch1;
    const LaxFamily expected = compressive_right ? LaxFamily::Lax2 : LaxFamily::Lax1;

    ShockData shock = make_shock({rho_minus, b.u_minus}, {rho_plus, b.u_plus}, s, gamma);
    if (shock.family != expected) {
        throw NoAdmissibleProfileError(std::string("selected branch classifies as ") +
                                       to_string(shock.family) + ", expected " + to_string(expected));
    }
    return shock;
}

HypothesisReport check_profile_hypotheses(const ShockData& shock, double gamma) {
    HypothesisReport report{};
    report.left_sonic = sonic_classify(shock.left, gamma);
    report.right_sonic = sonic_classify(shock.right, gamma);

    const double s = shock.s;
    if (s > 0.0 && shock.P_plus < shock.P_minus) {
        report.existence_case = ExistenceCase::CaseI;
        const bool lax2 = shock.family == LaxFamily::Lax2;
        report.subsonic_condition = lax2 && report.right_sonic == Sonic::Subsonic;
        report.signed_velocity_condition = lax2 && shock.right.u > 0.0;
        report.sign_chain_margin = s - (shock.right.u + sound_speed(shock.right.rho, gamma));
        if (!report.subsonic_condition) {
            report.notes.push_back(
                format("right state not subsonic (|u+| = %.6g, c_s(rho+) = %.6g): subsonic-state "
                       "condition inapplicable",
                       std::abs(shock.right.u), sound_speed(shock.right.rho, gamma)));
        }
    } else if (s < 0.0 && shock.P_minus < shock.P_plus) {
        report.existence_case = ExistenceCase::CaseII;
        const bool lax1 = shock.family == LaxFamily::Lax1;
        report.subsonic_condition = lax1 && report.left_sonic == Sonic::Subsonic;
        report.signed_velocity_condition = lax1 && shock.left.u < 0.0;
        report.sign_chain_margin = (shock.left.u - sound_speed(shock.left.rho, gamma)) - s;
        if (!report.subsonic_condition) {
            report.notes.push_back(
                format("left state not subsonic (|u-| = %.6g, c_s(rho-) = %.6g): subsonic-state "
                       "condition inapplicable",
                       std::abs(shock.left.u), sound_speed(shock.left.rho, gamma)));
        }
    } else {
        const std::string roots = format("P+ = %.6g, P- = %.6g", shock.P_plus, shock.P_minus);
        const std::string failed = s > 0.0 ? "s > 0 requires P+ < P-" : "s < 0 requires P- < P+";
        throw NoProfileGuaranteeError("no existence case applies: " + failed + " (" + roots + ")");
    }

    if (report.subsonic_condition) {
        report.condition = SufficientCondition::SubsonicState;
    } else if (report.signed_velocity_condition) {
        report.condition = SufficientCondition::SignedVelocity;
    } else {
        report.condition = SufficientCondition::HypothesesOnly;
        report.notes.emplace_back("sign hypotheses hold but no listed sufficient condition applies");
    }
    return report;
}

}  // namespace qhd
