#include "invitelab/rng.hpp"

#include <cmath>

namespace invitelab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64 SplitMix64::for_replication(std::uint64_t base_seed, std::uint32_t replication) {
    return SplitMix64(mix(base_seed ^ (kGolden * (static_cast<std::uint64_t>(replication) + 1))));
}

std::uint64_t SplitMix64::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_exponential(double rate) {
    return -std::log1p(-next_double()) / rate;
}

}  // namespace invitelab
