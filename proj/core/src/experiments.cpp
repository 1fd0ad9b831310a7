#include "invitelab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invitelab {

std::vector<std::string> validate(const ExperimentSpec& spec, bool for_simulation) {
    std::vector<std::string> errs = validate_params(spec.params, for_simulation);
    for (auto& e : validate_config(spec.fluid_cfg)) errs.push_back("fluid config: " + e);
    for (auto& e : validate_config(spec.sim_cfg)) errs.push_back("sim config: " + e);
    if (spec.inits.empty()) errs.push_back("at least one initial state is required");
    return errs;
}

CtmcState as_raw(const ExperimentInit& init, const ModelParams& p) {
    if (const CtmcState* s = std::get_if<CtmcState>(&init)) return *s;
    return lift_to_raw(std::get<FluidState>(init), p);
}

FluidState as_fluid(const ExperimentInit& init, const ModelParams& p) {
    if (const FluidState* s = std::get_if<FluidState>(&init)) return *s;
    return scale_center(std::get<CtmcState>(init), p);
}

SimSummary summarize(const CtmcTrajectory& traj,
                     const std::array<std::uint64_t, kEventKindCount>& counts) {
    if (traj.empty()) throw std::invalid_argument("summarize: empty trajectory");
    SimSummary out;
    out.event_counts = counts;
    out.final_state = traj.states.back();

    const double half = traj.times.back() / 2.0;
    double sx = 0.0, sy = 0.0, sz = 0.0, sw = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (traj.times[i] < half - 1e-12) continue;
        const CtmcState& s = traj.states[i];
        sx += static_cast<double>(s.X);
        sy += static_cast<double>(s.Y);
        sz += static_cast<double>(s.Z);
        sw += static_cast<double>(s.W());
        ++n;
    }
    out.avg_x = sx / static_cast<double>(n);
    out.avg_y = sy / static_cast<double>(n);
    out.avg_z = sz / static_cast<double>(n);
    out.avg_w = sw / static_cast<double>(n);
    return out;
}

namespace {

// Linear interpolation of a fluid trajectory at time t (clamped to the
// recorded range).
FluidState sample_at(const FluidTrajectory& traj, double t) {
    if (t <= traj.times.front()) return traj.states.front();
    if (t >= traj.times.back()) return traj.states.back();
    const auto it = std::upper_bound(traj.times.begin(), traj.times.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - traj.times.begin());
    const std::size_t lo = hi - 1;
    const double span = traj.times[hi] - traj.times[lo];
    const double f = span > 0.0 ? (t - traj.times[lo]) / span : 0.0;
    const FluidState& a = traj.states[lo];
    const FluidState& b = traj.states[hi];
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y), a.w + f * (b.w - a.w)};
}

double gap_norm(const FluidState& a, const FluidState& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dw = a.w - b.w;
    return std::sqrt(dx * dx + dy * dy + dw * dw);
}

}  // namespace

ComparisonResult run_comparison(const CtmcState& raw_init, const ModelParams& p,
                                const FluidConfig& fluid_cfg, const SimConfig& sim_cfg,
                                std::uint32_t replication) {
    FluidConfig fcfg = fluid_cfg;
    fcfg.t_end = std::max(fcfg.t_end, sim_cfg.t_end);

    const FluidState fluid_init = scale_center(raw_init, p);
    const FluidRun fluid = integrate(fluid_init, p, fcfg);
    SimResult sim = simulate_run(raw_init, p, sim_cfg, replication);
    const FluidTrajectory sim_scaled = scale_center(sim.trajectory);

    ComparisonResult out;
    out.fluid_verdict = fluid.verdict;
    out.sim_summary = summarize(sim.trajectory, sim.event_counts);
    out.gap_times = sim_scaled.times;
    out.gap_values.reserve(sim_scaled.size());
    for (std::size_t i = 0; i < sim_scaled.size(); ++i) {
        const double g = gap_norm(sim_scaled.states[i], sample_at(fluid.trajectory, sim_scaled.times[i]));
        out.gap_values.push_back(g);
        out.sup_gap = std::max(out.sup_gap, g);
    }
    return out;
}

CtmcState lift_to_raw(const FluidState& s, const ModelParams& p) {
    CtmcState c;
    c.X = std::max(0ll, std::llround(s.x * p.r + p.x_center()));
    c.Y = std::llround(s.y * p.r);
    c.Z = std::max(0ll, std::llround(z_from_yw(s.y, s.w) * p.r + p.z_center()));
    return c;
}

std::optional<SweepParam> sweep_param_from_name(const std::string& name) {
    if (name == "alpha") return SweepParam::Alpha;
    if (name == "beta") return SweepParam::Beta;
    if (name == "mu") return SweepParam::Mu;
    if (name == "gamma") return SweepParam::Gamma;
    if (name == "epsilon") return SweepParam::Epsilon;
    return std::nullopt;
}

const char* to_string(SweepParam sp) {
    switch (sp) {
        case SweepParam::Alpha: return "alpha";
        case SweepParam::Beta: return "beta";
        case SweepParam::Mu: return "mu";
        case SweepParam::Gamma: return "gamma";
        case SweepParam::Epsilon: return "epsilon";
    }
    return "unknown";
}

double SweepAxis::value_at(int i) const {
    if (count <= 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

namespace {

void set_param(ModelParams& p, SweepParam which, double value) {
    switch (which) {
        case SweepParam::Alpha: p.alpha = value; break;
        case SweepParam::Beta: p.beta = value; break;
        case SweepParam::Mu: p.mu = value; break;
        case SweepParam::Gamma: p.gamma = value; break;
        case SweepParam::Epsilon: p.epsilon = value; break;
    }
}

FluidOutcome worse(FluidOutcome a, FluidOutcome b) {
    const auto rank = [](FluidOutcome o) {
        switch (o) {
            case FluidOutcome::ConvergedToOrigin: return 0;
            case FluidOutcome::NotConvergedWithinHorizon: return 1;
            case FluidOutcome::Diverged: return 2;
        }
        return 2;
    };
    return rank(a) >= rank(b) ? a : b;
}

}  // namespace

std::vector<FluidState> standard_init_battery(const ModelParams& p) {
    const long long r = std::llround(p.r);
    return {scale_center({0, 0, 0}, p), scale_center({0, r, 0}, p), scale_center({0, -r, 0}, p)};
}

std::vector<SweepPoint> sweep_grid(const ModelParams& base, const SweepAxis& axis_a,
                                   const SweepAxis& axis_b, bool with_fluid,
                                   const FluidConfig& fluid_cfg) {
    if (axis_a.count < 1 || axis_b.count < 1)
        throw std::invalid_argument("sweep grid is empty");
    if (axis_a.param == axis_b.param)
        throw std::invalid_argument("sweep axes must differ");

    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(axis_a.count) * static_cast<std::size_t>(axis_b.count));
    for (int ia = 0; ia < axis_a.count; ++ia) {
        for (int ib = 0; ib < axis_b.count; ++ib) {
            ModelParams p = base;
            set_param(p, axis_a.param, axis_a.value_at(ia));
            set_param(p, axis_b.param, axis_b.value_at(ib));
            if (const auto errs = validate_params(p); !errs.empty())
                throw std::invalid_argument("sweep point violates parameter bounds: " + errs.front());

            SweepPoint pt;
            pt.params = p;
            pt.report = classify(p);
            if (with_fluid) {
                FluidOutcome worst = FluidOutcome::ConvergedToOrigin;
                for (const FluidState& init : standard_init_battery(p))
                    worst = worse(worst, integrate(init, p, fluid_cfg).verdict.outcome);
                pt.fluid_outcome = worst;
            }
            points.push_back(std::move(pt));
        }
    }
    return points;
}

}  // namespace invitelab
