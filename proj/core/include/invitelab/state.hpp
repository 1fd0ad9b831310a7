#pragma once

#include <cstdint>
#include <vector>

#include "invitelab/params.hpp"

namespace invitelab {

/// Integer state of the invitation chain.
struct CtmcState {
    long long X = 0;  ///< pending invited agents
    long long Y = 0;  ///< agent queue minus customer queue (signed)
    long long Z = 0;  ///< customers (or agents) in service

    /// Total head count in the system, |Y| + 2Z.
    long long W() const { return (Y < 0 ? -Y : Y) + 2 * Z; }

    /// Agent / customer queue lengths; never both positive.
    long long agent_queue() const { return Y > 0 ? Y : 0; }
    long long customer_queue() const { return Y < 0 ? -Y : 0; }

    bool operator==(const CtmcState&) const = default;
};

/// Centered, r-scaled state of the fluid system.
struct FluidState {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;

    double norm() const;
    bool finite() const;
};

/// In-service count recovered from the (y, w) pair: (w - |y|) / 2.
double z_from_yw(double y, double w);

/// Centering/scaling map from chain states to fluid coordinates.
FluidState scale_center(const CtmcState& s, const ModelParams& p);

enum class TrajectoryKind { CtmcRaw, CtmcScaled, Fluid };
const char* to_string(TrajectoryKind k);

struct TrajectoryMeta {
    ModelParams params;
    std::uint64_t seed = 0;
    std::uint32_t replication = 0;
    TrajectoryKind kind = TrajectoryKind::Fluid;
};

/// Time-stamped state sequence on a strictly increasing time grid.
template <class State>
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    TrajectoryMeta meta;

    std::size_t size() const { return times.size(); }
    bool empty() const { return times.empty(); }
};

using CtmcTrajectory = Trajectory<CtmcState>;
using FluidTrajectory = Trajectory<FluidState>;

/// Pathwise application of scale_center to every sample.
FluidTrajectory scale_center(const CtmcTrajectory& traj);

}  // namespace invitelab
