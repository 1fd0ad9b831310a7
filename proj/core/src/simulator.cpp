#include "invitelab/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace invitelab {

std::vector<std::string> validate_config(const SimConfig& cfg) {
    std::vector<std::string> errs;
    if (!(cfg.t_end > 0.0)) errs.push_back("t_end must be > 0");
    if (!(cfg.sample_dt > 0.0)) errs.push_back("sample_dt must be > 0");
    if (cfg.replications < 1) errs.push_back("replications must be >= 1");
    return errs;
}

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::CustomerArrival: return "CustomerArrival";
        case EventKind::InvitationAccepted: return "InvitationAccepted";
        case EventKind::FeedbackTick: return "FeedbackTick";
        case EventKind::ServiceCompletionReturn: return "ServiceCompletionReturn";
        case EventKind::ServiceCompletionLeave: return "ServiceCompletionLeave";
    }
    return "unknown";
}

double EventRates::total() const {
    double s = 0.0;
    for (const double r : rate) s += r;
    return s;
}

EventRates event_rates(const CtmcState& s, const ModelParams& p) {
    EventRates out;
    const double completion = p.mu * static_cast<double>(s.Z);
    const double completion_return = p.alpha * completion;
    out.rate[0] = p.arrival_rate();
    out.rate[1] = p.beta * static_cast<double>(s.X);
    out.rate[2] = p.epsilon * static_cast<double>(s.Y < 0 ? -s.Y : s.Y);
    out.rate[3] = completion_return;
    // Computed by difference so the two completion rates sum to mu*Z exactly.
    out.rate[4] = completion - completion_return;
    return out;
}

CtmcState apply_event(const CtmcState& s, EventKind e, const ModelParams& p) {
    const long long g = std::llround(p.gamma);
    CtmcState n = s;
    switch (e) {
        case EventKind::CustomerArrival:
            if (s.Y > 0) n.Z += 1;
            n.Y -= 1;
            n.X += g;
            break;
        case EventKind::InvitationAccepted:
            if (s.X < 1) throw InfeasibleEventError("invitation acceptance with X = 0");
            if (s.Y < 0) n.Z += 1;
            n.Y += 1;
            n.X -= std::min(g, s.X);
            break;
        case EventKind::FeedbackTick:
            if (s.X >= 1)
                n.X -= (s.Y > 0) - (s.Y < 0);
            else if (s.Y < 0)
                n.X += 1;
            break;
        case EventKind::ServiceCompletionReturn:
            if (s.Z < 1) throw InfeasibleEventError("service completion with Z = 0");
            if (s.Y >= 0) n.Z -= 1;
            n.Y += 1;
            n.X -= std::min(g, s.X);
            break;
        case EventKind::ServiceCompletionLeave:
            if (s.Z < 1) throw InfeasibleEventError("service completion with Z = 0");
            n.Z -= 1;
            break;
    }
    return n;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
    return out.str();
}

}  // namespace

SimResult simulate_run(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                       std::uint32_t replication) {
    if (const auto errs = validate_config(cfg); !errs.empty())
        throw std::invalid_argument("sim config: " + join(errs));

    SimResult out;
    CtmcTrajectory& traj = out.trajectory;
    traj.meta = {.params = p,
                 .seed = cfg.seed,
                 .replication = replication,
                 .kind = TrajectoryKind::CtmcRaw};

    const auto n = static_cast<std::size_t>(std::floor(cfg.t_end / cfg.sample_dt + 1e-9)) + 1;
    traj.times.resize(n);
    for (std::size_t i = 0; i < n; ++i) traj.times[i] = static_cast<double>(i) * cfg.sample_dt;
    traj.states.reserve(n);

    SplitMix64 rng = SplitMix64::for_replication(cfg.seed, replication);
    CtmcState s = init;
    double t = 0.0;
    std::size_t k = 0;
    while (k < n) {
        const EventRates rates = event_rates(s, p);
        const double total = rates.total();
        if (!(total > 0.0)) {
            for (; k < n; ++k) traj.states.push_back(s);
            break;
        }
        const double t_next = t + rng.next_exponential(total);
        for (; k < n && traj.times[k] < t_next; ++k) traj.states.push_back(s);
        if (k >= n) break;

        const double u = rng.next_double() * total;
        int kind = -1;
        double cum = 0.0;
        for (int e = 0; e < kEventKindCount; ++e) {
            cum += rates.rate[e];
            if (u < cum) {
                kind = e;
                break;
            }
        }
        if (kind < 0) {
            // u rounded up to the total rate; take the last positive slot.
            for (int e = kEventKindCount - 1; e >= 0; --e)
                if (rates.rate[e] > 0.0) {
                    kind = e;
                    break;
                }
        }

        s = apply_event(s, static_cast<EventKind>(kind), p);
        ++out.event_counts[static_cast<std::size_t>(kind)];
        if (cfg.record_events)
            out.events.push_back({t_next, static_cast<EventKind>(kind), s});
        t = t_next;
    }
    return out;
}

CtmcTrajectory simulate(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                        std::uint32_t replication) {
    return std::move(simulate_run(init, p, cfg, replication).trajectory);
}

FluidTrajectory simulate_scaled(const CtmcState& init, const ModelParams& p, const SimConfig& cfg,
                                std::uint32_t replication) {
    return scale_center(simulate(init, p, cfg, replication));
}

}  // namespace invitelab
