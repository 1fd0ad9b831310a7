#include "invitelab/stability.hpp"

#include <cmath>

#include <json.hpp>

namespace invitelab {

Matrix3 build_a_plus(const ModelParams& p) {
    const double half_am = 0.5 * p.alpha * p.mu;
    const double half_a2m = 0.5 * (p.alpha - 2.0) * p.mu;
    Matrix3 a;
    a(0, 0) = -p.gamma * p.beta;
    a(0, 1) = p.gamma * half_am - p.epsilon;
    a(0, 2) = -p.gamma * half_am;
    a(1, 0) = p.beta;
    a(1, 1) = -half_am;
    a(1, 2) = half_am;
    a(2, 0) = p.beta;
    a(2, 1) = -half_a2m;
    a(2, 2) = half_a2m;
    return a;
}

Matrix3 build_a_minus(const ModelParams& p) {
    const double half_am = 0.5 * p.alpha * p.mu;
    const double half_a2m = 0.5 * (p.alpha - 2.0) * p.mu;
    Matrix3 a;
    a(0, 0) = -p.gamma * p.beta;
    a(0, 1) = -p.gamma * half_am - p.epsilon;
    a(0, 2) = -p.gamma * half_am;
    a(1, 0) = p.beta;
    a(1, 1) = half_am;
    a(1, 2) = half_am;
    a(2, 0) = p.beta;
    a(2, 1) = half_a2m;
    a(2, 2) = half_a2m;
    return a;
}

Matrix3 inverse_a_plus(const ModelParams& p) {
    Matrix3 a;
    a(0, 0) = 0.0;
    a(0, 1) = -(p.alpha - 2.0) / (2.0 * p.beta);
    a(0, 2) = p.alpha / (2.0 * p.beta);
    a(1, 0) = -1.0 / p.epsilon;
    a(1, 1) = -p.gamma / p.epsilon;
    a(1, 2) = 0.0;
    a(2, 0) = -1.0 / p.epsilon;
    a(2, 1) = (p.epsilon - p.gamma * p.mu) / (p.epsilon * p.mu);
    a(2, 2) = -1.0 / p.mu;
    return a;
}

bool aminus_hurwitz(const ModelParams& p) {
    return (p.beta * p.gamma / p.mu + (1.0 - p.alpha)) * (p.gamma * p.mu / p.epsilon + 1.0) > 1.0;
}

bool check_condition_thm2(const ModelParams& p, std::string* reason) {
    if (reason) reason->clear();
    if (!(p.alpha > 0.0)) {
        if (reason) *reason = "requires alpha in (0,1)";
        return false;
    }
    const double bg2 = p.beta * p.gamma * p.gamma;
    const bool band = bg2 / 4.0 < p.epsilon && p.epsilon < bg2 / 2.0;
    const bool floor_ok =
        p.epsilon > bg2 / 2.0 - (p.alpha * p.gamma * p.mu / 2.0 -
                                 (1.0 - p.alpha) * p.mu * p.mu / (2.0 * p.beta));
    const bool gamma_ok = p.gamma > (1.0 - p.alpha) * p.mu / (p.alpha * p.beta);
    return band && floor_ok && gamma_ok;
}

bool check_condition_thm3(const ModelParams& p) {
    return p.epsilon < p.beta * p.gamma * p.gamma / 2.0 - p.alpha * p.gamma * p.mu / 2.0 &&
           p.gamma > p.alpha * p.mu / p.beta;
}

CubicPoly product_char_poly(const ModelParams& p) {
    const double a = p.alpha, b = p.beta, m = p.mu, g = p.gamma, e = p.epsilon;
    CubicPoly c;
    c.a = 1.0;
    c.b = -(m * m - a * m * m + b * b * g * g - 2.0 * b * e - a * b * g * m);
    c.c = b * b * e * e + b * b * g * g * m * m - 2.0 * b * e * m * m + a * b * e * m * m;
    c.d = -(b * e * m) * (b * e * m);
    return c;
}

bool tau_pencil_positive(const ModelParams& p, std::span<const double> probe_grid) {
    const CubicPoly prod = product_char_poly(p);
    // Reversal: N(tau) = -tau^3 * prod(-1/tau), so roots of N on (0, inf)
    // correspond one-to-one to negative real eigenvalues of A+ A-.
    const CubicPoly n{-prod.d, prod.c, -prod.b, prod.a};
    constexpr double tol = 1e-9;
    for (const auto& root : cubic_roots(n)) {
        const bool is_real = std::abs(root.imag()) <= tol * (1.0 + std::abs(root.real()));
        if (is_real && root.real() > tol) return false;
    }
    for (const double tau : probe_grid)
        if (!(n(tau) > 0.0)) return false;
    return true;
}

int rank_of_difference(const ModelParams& p) {
    return numerical_rank(build_a_plus(p) - build_a_minus(p));
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::ExponentiallyStable_CQLF: return "ExponentiallyStable_CQLF";
        case StabilityVerdict::LocallyStableHeuristic: return "LocallyStableHeuristic";
        case StabilityVerdict::NotClassified: return "NotClassified";
        case StabilityVerdict::AminusNotHurwitz: return "AminusNotHurwitz";
    }
    return "unknown";
}

StabilityReport classify(const ModelParams& p) {
    StabilityReport rep;
    rep.cond_thm2 = check_condition_thm2(p);
    rep.cond_thm3 = check_condition_thm3(p);
    rep.aplus_hurwitz = routh_hurwitz_cubic(char_poly(build_a_plus(p)));
    rep.aminus_hurwitz = invitelab::aminus_hurwitz(p);
    rep.diff_rank_one = rank_of_difference(p) == 1;

    const CubicPoly prod = product_char_poly(p);
    rep.product_has_negative_real_eig = has_negative_real_eigenvalue(prod);
    rep.discriminant_product = cubic_discriminant(prod);

    // Rank-one CQLF test: both constituents Hurwitz, rank-one difference,
    // and no negative real eigenvalue of the product.
    rep.cqlf_exists = rep.aplus_hurwitz && rep.aminus_hurwitz && rep.diff_rank_one &&
                      !rep.product_has_negative_real_eig;

    if (!rep.aminus_hurwitz)
        rep.verdict = StabilityVerdict::AminusNotHurwitz;
    else if (rep.cqlf_exists)
        rep.verdict = StabilityVerdict::ExponentiallyStable_CQLF;
    else
        rep.verdict = StabilityVerdict::LocallyStableHeuristic;
    return rep;
}

std::string to_json(const StabilityReport& rep, int indent) {
    nlohmann::ordered_json j;
    j["cond_thm2"] = rep.cond_thm2;
    j["cond_thm3"] = rep.cond_thm3;
    j["aplus_hurwitz"] = rep.aplus_hurwitz;
    j["aminus_hurwitz"] = rep.aminus_hurwitz;
    j["diff_rank_one"] = rep.diff_rank_one;
    j["product_has_negative_real_eig"] = rep.product_has_negative_real_eig;
    j["cqlf_exists"] = rep.cqlf_exists;
    j["discriminant_product"] = rep.discriminant_product;
    j["verdict"] = to_string(rep.verdict);
    return j.dump(indent);
}

}  // namespace invitelab
