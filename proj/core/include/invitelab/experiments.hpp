#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invitelab/fluid.hpp"
#include "invitelab/simulator.hpp"
#include "invitelab/stability.hpp"

namespace invitelab {

/// An initial state in either representation; raw chain states map to fluid
/// coordinates through scale_center, fluid states lift to the nearest chain
/// state.
using ExperimentInit = std::variant<CtmcState, FluidState>;

/// A fully resolved experiment: which system, from where, how long, where
/// the artifacts go.
struct ExperimentSpec {
    ModelParams params;
    std::vector<ExperimentInit> inits;
    FluidConfig fluid_cfg;
    SimConfig sim_cfg;
    std::filesystem::path outputs;
};

/// Violated invariants of an experiment (parameter bounds, config bounds,
/// an empty init list); empty result means runnable.
std::vector<std::string> validate(const ExperimentSpec& spec, bool for_simulation);

CtmcState as_raw(const ExperimentInit& init, const ModelParams& p);
FluidState as_fluid(const ExperimentInit& init, const ModelParams& p);

/// Event counts plus time-averages over the second half of the horizon.
struct SimSummary {
    std::array<std::uint64_t, kEventKindCount> event_counts{};
    double avg_x = 0.0;
    double avg_y = 0.0;
    double avg_z = 0.0;
    double avg_w = 0.0;
    CtmcState final_state;
};

SimSummary summarize(const CtmcTrajectory& traj,
                     const std::array<std::uint64_t, kEventKindCount>& counts);

/// Fluid-vs-simulation gap for one replication: both sides start from the
/// same raw init (the fluid side via scale_center) and are compared in
/// (x, y, w) on the simulation sampling grid.
struct ComparisonResult {
    double sup_gap = 0.0;
    std::vector<double> gap_times;
    std::vector<double> gap_values;
    FluidVerdict fluid_verdict;
    SimSummary sim_summary;
};

ComparisonResult run_comparison(const CtmcState& raw_init, const ModelParams& p,
                                const FluidConfig& fluid_cfg, const SimConfig& sim_cfg,
                                std::uint32_t replication = 0);

/// Nearest integer chain state representing a fluid state (X and Z floored
/// at zero).
CtmcState lift_to_raw(const FluidState& s, const ModelParams& p);

enum class SweepParam { Alpha, Beta, Mu, Gamma, Epsilon };
std::optional<SweepParam> sweep_param_from_name(const std::string& name);
const char* to_string(SweepParam sp);

struct SweepAxis {
    SweepParam param = SweepParam::Gamma;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;

    /// i-th grid value; endpoints inclusive, single-count axes sit at lo.
    double value_at(int i) const;
};

struct SweepPoint {
    ModelParams params;
    StabilityReport report;
    /// Worst fluid outcome over the standard init battery, when requested.
    std::optional<FluidOutcome> fluid_outcome;
};

/// Standard fluid init battery: scaled images of the raw states (0, 0, 0),
/// (0, +r, 0) and (0, -r, 0).
std::vector<FluidState> standard_init_battery(const ModelParams& p);

/// Classify every point of the axis_a x axis_b grid (row-major, axis_a
/// outer). Throws std::invalid_argument on an empty grid or when a grid
/// point violates the parameter bounds.
std::vector<SweepPoint> sweep_grid(const ModelParams& base, const SweepAxis& axis_a,
                                   const SweepAxis& axis_b, bool with_fluid = false,
                                   const FluidConfig& fluid_cfg = {});

}  // namespace invitelab
