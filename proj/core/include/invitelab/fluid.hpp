#pragma once

#include <optional>

#include "invitelab/params.hpp"
#include "invitelab/state.hpp"

namespace invitelab {

struct FluidConfig {
    double dt = 1e-3;
    double t_end = 100.0;
    /// Convergence ball radius; <= 0 selects 1e-4 * (1 + |init|).
    double conv_tol = 0.0;
    /// Time the norm must stay inside the ball.
    double conv_hold = 1.0;
};

std::vector<std::string> validate_config(const FluidConfig& cfg);

struct Derivative {
    double dx = 0.0;
    double dy = 0.0;
    double dw = 0.0;
};

/// Switched right-hand side away from the boundary:
///   y' = beta x + alpha mu (w - |y|) / 2
///   w' = beta x + (alpha - 2) mu (w - |y|) / 2
///   x' = -gamma y' - epsilon y
/// Continuous across y = 0.
Derivative rhs_interior(const FluidState& s, const ModelParams& p);

/// Same field with the one-sided boundary rule: on x = x_min (within 1e-12)
/// the x-derivative is clamped to max(dx, 0). Throws std::domain_error when
/// x < x_min - 1e-9.
Derivative rhs_with_boundary(const FluidState& s, const ModelParams& p);

enum class FluidOutcome { ConvergedToOrigin, NotConvergedWithinHorizon, Diverged };
const char* to_string(FluidOutcome o);

struct FluidVerdict {
    FluidOutcome outcome = FluidOutcome::NotConvergedWithinHorizon;
    std::optional<double> converged_at;  ///< set for ConvergedToOrigin
    FluidState final_state;
    double min_norm = 0.0;
    bool hit_boundary = false;
};

struct FluidRun {
    FluidTrajectory trajectory;
    FluidVerdict verdict;
};

/// Classical RK4 on the interior field with post-step projection onto
/// x >= x_min; a step whose projection activates flags hit_boundary. The
/// trajectory is sampled every step. Integration halts early on a non-finite
/// state or a norm beyond the divergence guard; the verdict then reads
/// Diverged. Throws std::domain_error when init.x < x_min - 1e-9.
FluidRun integrate(const FluidState& init, const ModelParams& p, const FluidConfig& cfg);

/// Convergence classification of a recorded fluid trajectory: earliest time
/// t* after which the norm stays within conv_tol for conv_hold time units;
/// Diverged when the norm passes 1e6 * (1 + |init|) or turns non-finite.
/// Throws std::invalid_argument on an empty trajectory.
FluidVerdict detect_convergence(const FluidTrajectory& traj, const FluidConfig& cfg);

/// Least-squares slope of ln|state(t)| over samples in [t_from, t_to],
/// skipping samples with norm <= floor_norm. NaN when underdetermined.
double log_norm_slope(const FluidTrajectory& traj, double t_from, double t_to,
                      double floor_norm = 0.0);

}  // namespace invitelab
