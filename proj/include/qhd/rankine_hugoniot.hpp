#pragma once

#include <string>
#include <vector>

#include "qhd/model.hpp"

namespace qhd {

enum class LaxFamily { Lax1, Lax2, NotAdmissible };
enum class Sonic { Subsonic, Supersonic, Sonic };

const char* to_string(LaxFamily family);
const char* to_string(Sonic sonic);

/// Velocity pair (u-, u+) on one root of the jump quadratic.
struct VelocityBranch {
    double u_minus;
    double u_plus;
};

/// Both velocity branches for given densities and speed.
///
/// branch1 takes the "+" sign (u- = s + d), branch2 the "-" sign (u- = s - d).
struct VelocityBranches {
    double d;
    VelocityBranch branch1;
    VelocityBranch branch2;
};

/// A discontinuity (W-, W+, s) satisfying the jump conditions and a Lax entropy condition.
struct ShockData {
    EndState left;
    EndState right;
    double s;
    LaxFamily family;
    ProfileConstants constants;
    double P_minus;
    double P_plus;
};

/// Residuals of the two jump conditions (mass, then Bernoulli).
struct JumpResiduals {
    double mass;
    double bernoulli;
};

JumpResiduals jump_residuals(const EndState& left, const EndState& right, double s, double gamma);

/// Solves the jump quadratic for u- and u+. Throws DegenerateShockError when the densities coincide.
VelocityBranches rh_velocity_branches(double rho_minus, double rho_plus, double s, double gamma);

/// Lax k-shock test lambda_k(W+) < s < lambda_k(W-) with lambda_{1,2} = u -/+ c_s.
LaxFamily lax_classify(const EndState& left, const EndState& right, double s, double gamma);

/// |u| against c_s(rho); |u| within 1e-12 of c_s counts as sonic.
Sonic sonic_classify(const EndState& state, double gamma);

/// Assembles ShockData from explicit end states.
///
/// Throws DegenerateShockError for equal densities, NoAdmissibleProfileError for s = 0,
/// a jump residual above 1e-9, or a discontinuity that is not a Lax shock.
ShockData make_shock(const EndState& left, const EndState& right, double s, double gamma);

/// Picks the velocity branch that yields a Lax shock: branch 2 (Lax 2) when rho+ < rho-,
/// branch 1 (Lax 1) when rho- < rho+.
ShockData select_admissible_branch(double rho_minus, double rho_plus, double s, double gamma);

enum class ExistenceCase { CaseI, CaseII };

const char* to_string(ExistenceCase c);

/// Which sufficient condition for the existence hypotheses is met.
enum class SufficientCondition {
    SubsonicState,  ///< Lax 2 with subsonic right state, or Lax 1 with subsonic left state
    SignedVelocity, ///< Lax 2 with u+ > 0, or Lax 1 with u- < 0
    HypothesesOnly  ///< sign hypotheses hold directly, no listed condition applies
};

const char* to_string(SufficientCondition c);

struct HypothesisReport {
    ExistenceCase existence_case;
    SufficientCondition condition;
    Sonic left_sonic;
    Sonic right_sonic;
    bool subsonic_condition;    ///< Lax 2 + subsonic right (Case I) / Lax 1 + subsonic left (Case II)
    bool signed_velocity_condition;
    /// s - (u+ + c_s(rho+)) for Lax 2, (u- - c_s(rho-)) - s for Lax 1; positive when the chain holds.
    double sign_chain_margin;
    std::vector<std::string> notes;
};

/// Decides which existence case applies. Never rejects on the subsonic test alone.
///
/// Throws NoProfileGuaranteeError when neither s > 0, P+ < P- nor s < 0, P- < P+ holds;
/// the message lists the failed inequalities.
HypothesisReport check_profile_hypotheses(const ShockData& shock, double gamma);

}  // namespace qhd
