#include "invitelab/fluid.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace invitelab {

std::vector<std::string> validate_config(const FluidConfig& cfg) {
    std::vector<std::string> errs;
    if (!(cfg.dt > 0.0)) errs.push_back("dt must be > 0");
    if (!(cfg.t_end > 0.0)) errs.push_back("t_end must be > 0");
    if (cfg.dt > cfg.t_end) errs.push_back("dt must be <= t_end");
    if (!(cfg.conv_hold >= 0.0)) errs.push_back("conv_hold must be >= 0");
    return errs;
}

Derivative rhs_interior(const FluidState& s, const ModelParams& p) {
    // Scaled excess of in-service work, (w - |y|) * mu / 2.
    const double q = 0.5 * p.mu * (s.w - std::abs(s.y));
    Derivative d;
    d.dy = p.beta * s.x + p.alpha * q;
    d.dw = p.beta * s.x + (p.alpha - 2.0) * q;
    d.dx = -p.gamma * d.dy - p.epsilon * s.y;
    return d;
}

Derivative rhs_with_boundary(const FluidState& s, const ModelParams& p) {
    const double xmin = p.x_min();
    if (s.x < xmin - 1e-9) throw std::domain_error("fluid state below the x boundary");
    Derivative d = rhs_interior(s, p);
    if (s.x <= xmin + 1e-12 && d.dx < 0.0) d.dx = 0.0;
    return d;
}

const char* to_string(FluidOutcome o) {
    switch (o) {
        case FluidOutcome::ConvergedToOrigin: return "ConvergedToOrigin";
        case FluidOutcome::NotConvergedWithinHorizon: return "NotConvergedWithinHorizon";
        case FluidOutcome::Diverged: return "Diverged";
    }
    return "unknown";
}

namespace {

FluidState advanced(const FluidState& s, const Derivative& d, double h) {
    return {s.x + h * d.dx, s.y + h * d.dy, s.w + h * d.dw};
}

FluidState rk4_step(const FluidState& s, double h, const ModelParams& p) {
    const Derivative k1 = rhs_interior(s, p);
    const Derivative k2 = rhs_interior(advanced(s, k1, h / 2.0), p);
    const Derivative k3 = rhs_interior(advanced(s, k2, h / 2.0), p);
    const Derivative k4 = rhs_interior(advanced(s, k3, h), p);
    return {s.x + h / 6.0 * (k1.dx + 2.0 * (k2.dx + k3.dx) + k4.dx),
            s.y + h / 6.0 * (k1.dy + 2.0 * (k2.dy + k3.dy) + k4.dy),
            s.w + h / 6.0 * (k1.dw + 2.0 * (k2.dw + k3.dw) + k4.dw)};
}

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
    return out.str();
}

}  // namespace

FluidRun integrate(const FluidState& init, const ModelParams& p, const FluidConfig& cfg) {
    if (const auto errs = validate_config(cfg); !errs.empty())
        throw std::invalid_argument("fluid config: " + join(errs));
    const double xmin = p.x_min();
    if (init.x < xmin - 1e-9) throw std::domain_error("init.x below the x boundary");

    FluidState s = init;
    if (s.x < xmin) s.x = xmin;

    FluidRun run;
    run.trajectory.meta = {.params = p, .seed = 0, .replication = 0, .kind = TrajectoryKind::Fluid};
    const auto n_steps = static_cast<std::size_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    run.trajectory.times.reserve(n_steps + 1);
    run.trajectory.states.reserve(n_steps + 1);
    run.trajectory.times.push_back(0.0);
    run.trajectory.states.push_back(s);

    bool hit = false;
    const double guard = 1e6 * (1.0 + init.norm());
    double t = 0.0;
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double tn = std::min(static_cast<double>(i) * cfg.dt, cfg.t_end);
        if (tn <= t) break;
        s = rk4_step(s, tn - t, p);
        if (s.x < xmin) {
            s.x = xmin;
            hit = true;
        }
        run.trajectory.times.push_back(tn);
        run.trajectory.states.push_back(s);
        t = tn;
        if (!s.finite() || s.norm() > guard) break;
    }

    run.verdict = detect_convergence(run.trajectory, cfg);
    run.verdict.hit_boundary = run.verdict.hit_boundary || hit;
    return run;
}

FluidVerdict detect_convergence(const FluidTrajectory& traj, const FluidConfig& cfg) {
    if (traj.empty()) throw std::invalid_argument("detect_convergence: empty trajectory");

    const double n0 = traj.states.front().norm();
    const double tol = cfg.conv_tol > 0.0 ? cfg.conv_tol : 1e-4 * (1.0 + n0);
    const double guard = 1e6 * (1.0 + n0);
    const double boundary_edge = traj.meta.params.x_min() + 1e-12;

    FluidVerdict v;
    v.final_state = traj.states.back();
    double min_norm = std::numeric_limits<double>::infinity();
    bool diverged = false;
    std::ptrdiff_t run_start = -1;

    for (std::size_t i = 0; i < traj.size(); ++i) {
        const FluidState& s = traj.states[i];
        const double nn = s.norm();
        if (!s.finite() || nn > guard) {
            diverged = true;
            break;
        }
        min_norm = std::min(min_norm, nn);
        if (s.x <= boundary_edge) v.hit_boundary = true;
        if (!v.converged_at) {
            if (nn <= tol) {
                if (run_start < 0) run_start = static_cast<std::ptrdiff_t>(i);
                if (traj.times[i] - traj.times[run_start] >= cfg.conv_hold - 1e-12)
                    v.converged_at = traj.times[run_start];
            } else {
                run_start = -1;
            }
        }
    }

    v.min_norm = min_norm;
    if (diverged) {
        v.outcome = FluidOutcome::Diverged;
        v.converged_at.reset();
    } else if (v.converged_at) {
        v.outcome = FluidOutcome::ConvergedToOrigin;
    } else {
        v.outcome = FluidOutcome::NotConvergedWithinHorizon;
    }
    return v;
}

double log_norm_slope(const FluidTrajectory& traj, double t_from, double t_to, double floor_norm) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = traj.times[i];
        if (t < t_from || t > t_to) continue;
        const double nn = traj.states[i].norm();
        if (!std::isfinite(nn) || nn <= 0.0 || nn <= floor_norm) continue;
        const double ln = std::log(nn);
        sx += t;
        sy += ln;
        sxx += t * t;
        sxy += t * ln;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace invitelab
