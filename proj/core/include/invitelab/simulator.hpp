#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "invitelab/params.hpp"
#include "invitelab/rng.hpp"
#include "invitelab/state.hpp"

namespace invitelab {

struct SimConfig {
    std::uint64_t seed = 1;
    double t_end = 40.0;
    double sample_dt = 0.01;
    int replications = 1;
    /// Retain the per-event log (off by default; event counts are always kept).
    bool record_events = false;
};

std::vector<std::string> validate_config(const SimConfig& cfg);

enum class EventKind : int {
    CustomerArrival = 0,
    InvitationAccepted = 1,
    FeedbackTick = 2,
    ServiceCompletionReturn = 3,
    ServiceCompletionLeave = 4,
};
inline constexpr int kEventKindCount = 5;
const char* to_string(EventKind k);

struct EventRates {
    std::array<double, kEventKindCount> rate{};

    double total() const;
    double operator[](EventKind k) const { return rate[static_cast<int>(k)]; }
};

/// Exponential-clock intensities in state s: arrivals at Lambda = lambda*r,
/// acceptances at beta*X, feedback ticks at epsilon*|Y|, and completions at
/// mu*Z split alpha : (1 - alpha) into return / leave. The two completion
/// rates sum to mu*Z exactly.
EventRates event_rates(const CtmcState& s, const ModelParams& p);

struct InfeasibleEventError : std::logic_error {
    using std::logic_error::logic_error;
};

/// One event transition; branch conditions read the pre-state.
///  CustomerArrival:          Y>0 ? Z+1 : Z;  Y-1;  X+gamma
///  InvitationAccepted:       Y<0 ? Z+1 : Z;  Y+1;  X -= min(gamma, X)
///  FeedbackTick:             X>=1: X -= sgn(Y); X==0 and Y<0: X+1; else no-op
///  ServiceCompletionReturn:  Y>=0 ? Z-1 : Z;  Y+1;  X -= min(gamma, X)
///  ServiceCompletionLeave:   Z-1
/// Throws InfeasibleEventError for a completion with Z = 0 or an acceptance
/// with X = 0 (their rates vanish there; hitting this is a caller bug).
CtmcState apply_event(const CtmcState& s, EventKind e, const ModelParams& p);

struct EventRecord {
    double t = 0.0;
    EventKind kind = EventKind::CustomerArrival;
    CtmcState state_after;
};

struct SimResult {
    CtmcTrajectory trajectory;
    std::array<std::uint64_t, kEventKindCount> event_counts{};
    std::vector<EventRecord> events;  ///< populated only with cfg.record_events
};

/// Next-event simulation of one replication: exponential holding time at the
/// total rate, event drawn proportionally to the individual rates, state
/// advanced by apply_event. Output is sampled piecewise-constant on the grid
/// k * sample_dt up to t_end. Deterministic in (cfg.seed, replication).
SimResult simulate_run(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                       std::uint32_t replication = 0);

/// Trajectory-only wrapper around simulate_run.
CtmcTrajectory simulate(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                        std::uint32_t replication = 0);

/// simulate() followed by the pathwise centering/scaling map.
FluidTrajectory simulate_scaled(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                                std::uint32_t replication = 0);

}  // namespace invitelab
