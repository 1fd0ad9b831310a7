#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "invitelab/simulator.hpp"

using namespace invitelab;

namespace {

ModelParams example1(double r = 1000) {
    return {.lambda = 1, .alpha = 0.7, .beta = 1, .mu = 1, .gamma = 2, .epsilon = 1.5, .r = r};
}

}  // namespace

TEST_CASE("event rates at hand-computed states") {
    const ModelParams p = example1();

    const EventRates empty = event_rates({0, 0, 0}, p);
    CHECK(empty[EventKind::CustomerArrival] == doctest::Approx(1000.0));
    CHECK(empty[EventKind::InvitationAccepted] == 0.0);
    CHECK(empty[EventKind::FeedbackTick] == 0.0);
    CHECK(empty[EventKind::ServiceCompletionReturn] == 0.0);
    CHECK(empty[EventKind::ServiceCompletionLeave] == 0.0);

    const EventRates r = event_rates({10, -4, 3}, p);
    CHECK(r[EventKind::CustomerArrival] == doctest::Approx(1000.0));
    CHECK(r[EventKind::InvitationAccepted] == doctest::Approx(10.0));
    CHECK(r[EventKind::FeedbackTick] == doctest::Approx(6.0));
    CHECK(r[EventKind::ServiceCompletionReturn] == doctest::Approx(2.1));
    CHECK(r[EventKind::ServiceCompletionLeave] == doctest::Approx(0.9));
}

TEST_CASE("rate bookkeeping: the completion split sums to mu*Z exactly") {
    const ModelParams p = example1();
    for (long long z : {0ll, 1ll, 3ll, 17ll, 12345ll}) {
        const EventRates r = event_rates({7, -2, z}, p);
        CHECK(r[EventKind::ServiceCompletionReturn] + r[EventKind::ServiceCompletionLeave] ==
              p.mu * static_cast<double>(z));
        CHECK(r.total() == doctest::Approx(p.arrival_rate() + p.beta * 7 + p.epsilon * 2 +
                                           p.mu * static_cast<double>(z)));
    }
}

TEST_CASE("event transitions follow the scheme rules") {
    const ModelParams p = example1();

    SUBCASE("customer arrival") {
        CHECK(apply_event({5, 0, 3}, EventKind::CustomerArrival, p) == CtmcState{7, -1, 3});
        CHECK(apply_event({5, 2, 3}, EventKind::CustomerArrival, p) == CtmcState{7, 1, 4});
        CHECK(apply_event({0, -1, 0}, EventKind::CustomerArrival, p) == CtmcState{2, -2, 0});
    }

    SUBCASE("invitation acceptance floors X at zero") {
        CHECK(apply_event({1, -2, 3}, EventKind::InvitationAccepted, p) == CtmcState{0, -1, 4});
        CHECK(apply_event({5, 1, 3}, EventKind::InvitationAccepted, p) == CtmcState{3, 2, 3});
        CHECK(apply_event({5, 0, 3}, EventKind::InvitationAccepted, p) == CtmcState{3, 1, 3});
        CHECK_THROWS_AS((void)apply_event({0, -2, 3}, EventKind::InvitationAccepted, p),
                        InfeasibleEventError);
    }

    SUBCASE("feedback tick nudges X against the sign of Y") {
        CHECK(apply_event({0, -5, 2}, EventKind::FeedbackTick, p) == CtmcState{1, -5, 2});
        CHECK(apply_event({0, 5, 2}, EventKind::FeedbackTick, p) == CtmcState{0, 5, 2});
        CHECK(apply_event({4, 5, 2}, EventKind::FeedbackTick, p) == CtmcState{3, 5, 2});
        CHECK(apply_event({4, -5, 2}, EventKind::FeedbackTick, p) == CtmcState{5, -5, 2});
        CHECK(apply_event({4, 0, 2}, EventKind::FeedbackTick, p) == CtmcState{4, 0, 2});
    }

    SUBCASE("completion with return re-queues the agent") {
        CHECK(apply_event({5, -2, 3}, EventKind::ServiceCompletionReturn, p) ==
              CtmcState{3, -1, 3});
        CHECK(apply_event({5, 2, 3}, EventKind::ServiceCompletionReturn, p) == CtmcState{3, 3, 2});
        CHECK(apply_event({1, 0, 3}, EventKind::ServiceCompletionReturn, p) == CtmcState{0, 1, 2});
        CHECK_THROWS_AS((void)apply_event({5, 2, 0}, EventKind::ServiceCompletionReturn, p),
                        InfeasibleEventError);
    }

    SUBCASE("completion with leave only frees the server") {
        CHECK(apply_event({5, 2, 3}, EventKind::ServiceCompletionLeave, p) == CtmcState{5, 2, 2});
        CHECK_THROWS_AS((void)apply_event({5, 2, 0}, EventKind::ServiceCompletionLeave, p),
                        InfeasibleEventError);
    }
}

TEST_CASE("a silent system stays put") {
    ModelParams p = example1();
    p.lambda = 0.0;  // degenerate on purpose, bypassing validation
    const SimConfig cfg{.seed = 7, .t_end = 2.0, .sample_dt = 0.01};
    const CtmcTrajectory traj = simulate({0, 0, 0}, p, cfg);
    CHECK(traj.size() == 201);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(2.0));
    for (const CtmcState& s : traj.states) CHECK(s == CtmcState{0, 0, 0});
}

TEST_CASE("equal seeds reproduce, different replications differ") {
    const ModelParams p = example1(100);
    const SimConfig cfg{.seed = 42, .t_end = 5.0, .sample_dt = 0.01};
    const CtmcTrajectory a = simulate({0, 0, 0}, p, cfg, 0);
    const CtmcTrajectory b = simulate({0, 0, 0}, p, cfg, 0);
    REQUIRE(a.size() == b.size());
    CHECK(a.states == b.states);

    const CtmcTrajectory c = simulate({0, 0, 0}, p, cfg, 1);
    CHECK(a.states != c.states);
}

TEST_CASE("chain invariants along a sampled run") {
    const ModelParams p = example1(100);
    const SimConfig cfg{.seed = 11, .t_end = 10.0, .sample_dt = 0.01, .record_events = true};
    const SimResult res = simulate_run({0, 0, 0}, p, cfg);

    REQUIRE_FALSE(res.events.empty());
    std::uint64_t total = 0;
    for (const auto c : res.event_counts) total += c;
    CHECK(total == res.events.size());

    CtmcState prev{0, 0, 0};
    for (const EventRecord& ev : res.events) {
        const CtmcState& s = ev.state_after;
        CHECK(s.X >= 0);
        CHECK(s.Z >= 0);
        // Non-idling encoding: the two queues cannot be positive together.
        CHECK(s.agent_queue() * s.customer_queue() == 0);

        // Head-count bookkeeping per event kind.
        const long long dw = s.W() - prev.W();
        switch (ev.kind) {
            case EventKind::CustomerArrival: CHECK(dw == 1); break;
            case EventKind::InvitationAccepted: CHECK(dw == 1); break;
            case EventKind::FeedbackTick: CHECK(dw == 0); break;
            case EventKind::ServiceCompletionReturn: CHECK(dw == -1); break;
            case EventKind::ServiceCompletionLeave: CHECK(dw == -2); break;
        }
        prev = s;
    }
}

TEST_CASE("empirical event frequencies match the generator") {
    // Small system so a handful of states soak up most of the mass.
    const ModelParams p{.lambda = 2, .alpha = 0.5, .beta = 1, .mu = 1, .gamma = 1,
                        .epsilon = 1, .r = 1};
    const SimConfig cfg{.seed = 1234, .t_end = 150000.0, .sample_dt = 100.0,
                        .record_events = true};
    const SimResult res = simulate_run({0, 0, 0}, p, cfg);
    REQUIRE(res.events.size() > 300000);

    using Key = std::tuple<long long, long long, long long>;
    std::map<Key, std::array<std::uint64_t, kEventKindCount + 1>> visits;
    CtmcState prev{0, 0, 0};
    for (const EventRecord& ev : res.events) {
        auto& slot = visits[{prev.X, prev.Y, prev.Z}];
        ++slot[static_cast<std::size_t>(ev.kind)];
        ++slot[kEventKindCount];
        prev = ev.state_after;
    }

    int tested = 0;
    for (const auto& [key, counts] : visits) {
        const auto n = static_cast<double>(counts[kEventKindCount]);
        if (n < 5000) continue;
        const CtmcState s{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        const EventRates rates = event_rates(s, p);
        const double total = rates.total();
        for (int e = 0; e < kEventKindCount; ++e) {
            const double want = rates.rate[e] / total;
            const double got = static_cast<double>(counts[static_cast<std::size_t>(e)]) / n;
            const double se = std::sqrt(want * (1.0 - want) / n);
            CHECK(std::abs(got - want) <= 3.0 * se + 1e-12);
        }
        ++tested;
    }
    CHECK(tested >= 5);
}

TEST_CASE("arrival counts concentrate around Lambda * t_end") {
    const ModelParams p = example1(100);  // Lambda = 100
    const SimConfig cfg{.seed = 77, .t_end = 20.0, .sample_dt = 0.1};
    const double expect = p.arrival_rate() * cfg.t_end;
    for (std::uint32_t rep = 0; rep < 3; ++rep) {
        const SimResult res = simulate_run({0, 0, 0}, p, cfg, rep);
        const auto arrivals =
            static_cast<double>(res.event_counts[static_cast<int>(EventKind::CustomerArrival)]);
        CHECK(std::abs(arrivals - expect) <= 4.0 * std::sqrt(expect));
    }
}

TEST_CASE("scaled simulation starts at the origin from the centering point") {
    const ModelParams p = example1();
    const SimConfig cfg{.seed = 3, .t_end = 1.0, .sample_dt = 0.01};
    const FluidTrajectory traj = simulate_scaled({300, 0, 1000}, p, cfg);
    CHECK(traj.meta.kind == TrajectoryKind::CtmcScaled);
    CHECK(traj.states.front().x == doctest::Approx(0.0));
    CHECK(traj.states.front().y == 0.0);
    CHECK(traj.states.front().w == doctest::Approx(0.0));
}

TEST_CASE("config validation") {
    CHECK(validate_config(SimConfig{}).empty());
    CHECK_FALSE(validate_config(SimConfig{.t_end = -1.0}).empty());
    CHECK_FALSE(validate_config(SimConfig{.sample_dt = 0.0}).empty());
    CHECK_FALSE(validate_config(SimConfig{.replications = 0}).empty());
    CHECK_THROWS_AS((void)simulate({0, 0, 0}, example1(), SimConfig{.t_end = -1.0}),
                    std::invalid_argument);
}
