#include "invitelab/state.hpp"

#include <cmath>

namespace invitelab {

double FluidState::norm() const { return std::sqrt(x * x + y * y + w * w); }

bool FluidState::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(w);
}

double z_from_yw(double y, double w) { return 0.5 * (w - std::abs(y)); }

FluidState scale_center(const CtmcState& s, const ModelParams& p) {
    FluidState f;
    f.x = (static_cast<double>(s.X) - p.x_center()) / p.r;
    f.y = static_cast<double>(s.Y) / p.r;
    f.w = (static_cast<double>(s.W()) - p.w_center()) / p.r;
    return f;
}

const char* to_string(TrajectoryKind k) {
    switch (k) {
        case TrajectoryKind::CtmcRaw: return "ctmc_raw";
        case TrajectoryKind::CtmcScaled: return "ctmc_scaled";
        case TrajectoryKind::Fluid: return "fluid";
    }
    return "unknown";
}

FluidTrajectory scale_center(const CtmcTrajectory& traj) {
    FluidTrajectory out;
    out.times = traj.times;
    out.meta = traj.meta;
    out.meta.kind = TrajectoryKind::CtmcScaled;
    out.states.reserve(traj.states.size());
    for (const auto& s : traj.states) out.states.push_back(scale_center(s, traj.meta.params));
    return out;
}

}  // namespace invitelab
