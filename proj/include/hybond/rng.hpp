#pragma once

#include <cstdint>
#include <random>

#include "hybond/sim_time.hpp"

namespace hybond {

/// splitmix64 finalizer, used to derive per-replica seeds from
/// (campaign seed, replica index) so replicas are decorrelated and each one
/// is individually reproducible.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class ReplicaRng {
  public:
    ReplicaRng(std::uint64_t campaign_seed, std::uint32_t replica_index)
        : gen_(splitmix64(campaign_seed ^ splitmix64(replica_index + 1))) {}

    /// Uniform integer microseconds in [lo, hi] (inclusive).
    Duration uniform_us(Duration lo, Duration hi) {
        if (hi <= lo) return lo;
        return std::uniform_int_distribution<Duration>(lo, hi)(gen_);
    }

    /// Uniform in [lo, lo + window) — the fault phase draw. window == 0
    /// degenerates to lo.
    SimTime uniform_phase(SimTime lo, Duration window) {
        if (window == 0) return lo;
        return lo + std::uniform_int_distribution<Duration>(0, window - 1)(gen_);
    }

    std::mt19937_64& raw() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace hybond
