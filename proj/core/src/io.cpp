#include "invitelab/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#ifndef INVITELAB_GIT_DESCRIBE
#define INVITELAB_GIT_DESCRIBE "unknown"
#endif

namespace invitelab {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (const double v : values) {
        if (!first) out += ',';
        out += format_double(v);
        first = false;
    }
    out += '\n';
}

nlohmann::ordered_json state_json(const FluidState& s) {
    return {{"x", s.x}, {"y", s.y}, {"w", s.w}};
}

nlohmann::ordered_json state_json(const CtmcState& s) {
    return {{"X", s.X}, {"Y", s.Y}, {"Z", s.Z}};
}

nlohmann::ordered_json verdict_json(const FluidVerdict& v) {
    nlohmann::ordered_json j;
    j["outcome"] = to_string(v.outcome);
    if (v.converged_at)
        j["converged_at"] = *v.converged_at;
    else
        j["converged_at"] = nullptr;
    j["final_state"] = state_json(v.final_state);
    j["min_norm"] = v.min_norm;
    j["hit_boundary"] = v.hit_boundary;
    return j;
}

nlohmann::ordered_json summary_json(const SimSummary& s) {
    nlohmann::ordered_json counts;
    for (int e = 0; e < kEventKindCount; ++e)
        counts[to_string(static_cast<EventKind>(e))] = s.event_counts[static_cast<std::size_t>(e)];
    nlohmann::ordered_json j;
    j["event_counts"] = counts;
    j["avg_X_second_half"] = s.avg_x;
    j["avg_Y_second_half"] = s.avg_y;
    j["avg_Z_second_half"] = s.avg_z;
    j["avg_W_second_half"] = s.avg_w;
    j["final_state"] = state_json(s.final_state);
    return j;
}

}  // namespace

std::string to_csv(const FluidTrajectory& traj) {
    std::string out = "t,x,y,w,z\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const FluidState& s = traj.states[i];
        append_row(out, {traj.times[i], s.x, s.y, s.w, z_from_yw(s.y, s.w)});
    }
    return out;
}

std::string to_csv_raw(const CtmcTrajectory& traj) {
    std::string out = "t,X,Y,Z,W\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const CtmcState& s = traj.states[i];
        out += format_double(traj.times[i]);
        out += ',';
        out += std::to_string(s.X);
        out += ',';
        out += std::to_string(s.Y);
        out += ',';
        out += std::to_string(s.Z);
        out += ',';
        out += std::to_string(s.W());
        out += '\n';
    }
    return out;
}

std::string to_csv_scaled(const FluidTrajectory& traj) {
    std::string out = "t,x,y,w\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const FluidState& s = traj.states[i];
        append_row(out, {traj.times[i], s.x, s.y, s.w});
    }
    return out;
}

std::string gap_to_csv(const ComparisonResult& r) {
    std::string out = "t,gap\n";
    for (std::size_t i = 0; i < r.gap_times.size(); ++i)
        append_row(out, {r.gap_times[i], r.gap_values[i]});
    return out;
}

std::string to_json(const FluidVerdict& v, int indent) { return verdict_json(v).dump(indent); }

std::string to_json(const SimSummary& s, int indent) { return summary_json(s).dump(indent); }

std::string to_json(const ComparisonResult& r, int indent) {
    nlohmann::ordered_json j;
    j["sup_gap"] = r.sup_gap;
    j["fluid_verdict"] = verdict_json(r.fluid_verdict);
    j["sim_summary"] = summary_json(r.sim_summary);
    return j.dump(indent);
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points, bool with_fluid) {
    std::string out = "lambda,alpha,beta,mu,gamma,epsilon,r,cond_thm2,cond_thm3,aminus_hurwitz,cqlf_exists";
    if (with_fluid) out += ",fluid_verdict";
    out += '\n';
    for (const SweepPoint& pt : points) {
        const ModelParams& p = pt.params;
        for (const double v : {p.lambda, p.alpha, p.beta, p.mu, p.gamma, p.epsilon, p.r}) {
            out += format_double(v);
            out += ',';
        }
        out += pt.report.cond_thm2 ? '1' : '0';
        out += ',';
        out += pt.report.cond_thm3 ? '1' : '0';
        out += ',';
        out += pt.report.aminus_hurwitz ? '1' : '0';
        out += ',';
        out += pt.report.cqlf_exists ? '1' : '0';
        if (with_fluid) {
            out += ',';
            out += pt.fluid_outcome ? to_string(*pt.fluid_outcome) : "";
        }
        out += '\n';
    }
    return out;
}

std::string run_metadata_json(const ModelParams& p, const SimConfig& cfg, int indent) {
    nlohmann::ordered_json j;
    j["params"] = nlohmann::ordered_json::parse(params_to_json(p));
    j["seed"] = cfg.seed;
    j["config"] = {{"t_end", cfg.t_end},
                   {"sample_dt", cfg.sample_dt},
                   {"replications", cfg.replications}};
    j["build"] = build_describe();
    return j.dump(indent);
}

const char* build_describe() { return INVITELAB_GIT_DESCRIBE; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace invitelab
