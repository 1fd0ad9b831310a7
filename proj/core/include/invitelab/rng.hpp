#pragma once

#include <cstdint>

namespace invitelab {

/// SplitMix64 generator (Steele, Lea & Flood). Chosen for bit-exact
/// reproducibility across platforms and compilers; std::* distributions are
/// not portable in that sense.
///
/// Stream layout: replication k of base seed s is seeded with
/// mix(s ^ (k + 1) * 0x9E3779B97F4A7C15), so each replication draws from its
/// own decorrelated stream and a run is reproducible from (seed, k) alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 for_replication(std::uint64_t base_seed, std::uint32_t replication);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double();

    /// Inverse-CDF exponential sample; uses log1p to stay accurate near 0.
    double next_exponential(double rate);

private:
    std::uint64_t state_;
};

}  // namespace invitelab
