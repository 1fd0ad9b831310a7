#pragma once

#include <filesystem>
#include <string>

#include "invitelab/experiments.hpp"

namespace invitelab {

/// Shortest round-trip decimal form of a double (locale-independent).
std::string format_double(double v);

/// Fluid trajectory export: header t,x,y,w,z with z recovered from (y, w).
std::string to_csv(const FluidTrajectory& traj);

/// Raw chain trajectory export: header t,X,Y,Z,W.
std::string to_csv_raw(const CtmcTrajectory& traj);

/// Scaled trajectory export: header t,x,y,w.
std::string to_csv_scaled(const FluidTrajectory& traj);

/// Gap curve export: header t,gap.
std::string gap_to_csv(const ComparisonResult& r);

std::string to_json(const FluidVerdict& v, int indent = -1);
std::string to_json(const SimSummary& s, int indent = -1);
std::string to_json(const ComparisonResult& r, int indent = -1);

/// Region CSV: one row per grid point with the parameter values and the
/// classification flags (0/1), plus a fluid_verdict column when present.
std::string sweep_to_csv(const std::vector<SweepPoint>& points, bool with_fluid);

/// Sidecar with params, seed, config and the build stamp.
std::string run_metadata_json(const ModelParams& p, const SimConfig& cfg, int indent = 2);

/// `git describe` of the build, or "unknown".
const char* build_describe();

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace invitelab
