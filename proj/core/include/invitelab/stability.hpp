#pragma once

#include <span>
#include <string>

#include "invitelab/cubic.hpp"
#include "invitelab/matrix3.hpp"
#include "invitelab/params.hpp"

namespace invitelab {

/// System matrix of the switched fluid dynamics on the y >= 0 domain.
Matrix3 build_a_plus(const ModelParams& p);

/// System matrix on the y < 0 domain.
Matrix3 build_a_minus(const ModelParams& p);

/// Closed-form inverse of the plus-domain matrix; valid because
/// det(A+) = -beta*epsilon*mu never vanishes for usable parameters.
Matrix3 inverse_a_plus(const ModelParams& p);

/// Hurwitz test for the minus-domain matrix in closed form:
/// (beta*gamma/mu + (1 - alpha)) * (gamma*mu/epsilon + 1) > 1.
bool aminus_hurwitz(const ModelParams& p);

/// First sufficient exponential-stability condition:
///   beta*gamma^2/4 < epsilon < beta*gamma^2/2,
///   epsilon > beta*gamma^2/2 - (alpha*gamma*mu/2 - (1-alpha)*mu^2/(2*beta)),
///   gamma > (1-alpha)*mu/(alpha*beta).
/// Needs alpha > 0; otherwise false, with *reason set when provided.
bool check_condition_thm2(const ModelParams& p, std::string* reason = nullptr);

/// Second sufficient exponential-stability condition:
///   epsilon < beta*gamma^2/2 - alpha*gamma*mu/2  and  gamma > alpha*mu/beta.
bool check_condition_thm3(const ModelParams& p);

/// Characteristic polynomial of the product A+ A- in closed form:
///   a = 1,
///   b = -(mu^2 - alpha mu^2 + beta^2 gamma^2 - 2 beta eps - alpha beta gamma mu),
///   c = beta^2 eps^2 + beta^2 gamma^2 mu^2 - 2 beta eps mu^2 + alpha beta eps mu^2,
///   d = -beta^2 eps^2 mu^2.
CubicPoly product_char_poly(const ModelParams& p);

inline constexpr std::array<double, 7> kDefaultTauProbeGrid{0.0, 0.01, 0.1, 1.0, 10.0, 100.0, 1e4};

/// True iff the pencil determinant numerator
///   N(tau) = -d tau^3 + c tau^2 - b tau + a   (coefficients of product_char_poly)
/// has no root on [0, inf). N is the reversal of the product cubic, so its
/// positive roots are exactly the negative real eigenvalues of A+ A- under
/// tau = -1/lambda. Decided by root analysis; the probe grid is a sanity
/// cross-check only.
bool tau_pencil_positive(const ModelParams& p,
                         std::span<const double> probe_grid = kDefaultTauProbeGrid);

/// Numerical rank of A+ - A-. The difference lives in the middle column,
/// (gamma*alpha*mu, -alpha*mu, (2 - alpha)*mu)^T, whose third entry keeps it
/// rank one even at alpha = 0 (the |y| kink never leaves the w row).
int rank_of_difference(const ModelParams& p);

enum class StabilityVerdict {
    ExponentiallyStable_CQLF,
    LocallyStableHeuristic,
    NotClassified,
    AminusNotHurwitz,
};
const char* to_string(StabilityVerdict v);

struct StabilityReport {
    bool cond_thm2 = false;
    bool cond_thm3 = false;
    bool aplus_hurwitz = false;
    bool aminus_hurwitz = false;
    bool diff_rank_one = false;
    bool product_has_negative_real_eig = false;
    bool cqlf_exists = false;
    double discriminant_product = 0.0;
    StabilityVerdict verdict = StabilityVerdict::NotClassified;
};

/// Runs every criterion and aggregates the verdict. CQLF existence uses the
/// rank-one product test and therefore requires both matrices Hurwitz, a
/// rank-one difference, and no negative real eigenvalue of A+ A-.
StabilityReport classify(const ModelParams& p);

std::string to_json(const StabilityReport& rep, int indent = -1);

}  // namespace invitelab
