#pragma once

#include <cstdint>
#include <vector>

#include "hybond/sim_time.hpp"

namespace hybond {

enum class Direction { Downlink, Uplink };

/// Constant-bitrate UDP flow.
struct FlowSpec {
    Direction direction = Direction::Downlink;
    std::uint64_t rate_bps = 10'000'000;
    std::uint32_t packet_size_bytes = 1250;  // 1 ms packet grid at 10 Mbps
    Duration duration = sec(40);
    SimTime start_at = 0;

    Duration inter_packet_gap() const {
        return static_cast<Duration>(packet_size_bytes) * 8 * kSecond / rate_bps;
    }
    std::uint64_t total_packets() const {
        return duration / inter_packet_gap();
    }
    std::uint32_t duration_seconds() const {
        return static_cast<std::uint32_t>((duration + kSecond - 1) / kSecond);
    }
};

/// Per-second accounting of one flow, indexed by the send second.
struct FlowStats {
    std::vector<std::uint64_t> sent;
    std::vector<std::uint64_t> delivered;
    std::vector<std::uint64_t> lost;

    explicit FlowStats(std::uint32_t seconds = 0)
        : sent(seconds, 0), delivered(seconds, 0), lost(seconds, 0) {}

    /// lost[i] = sent[i] - delivered[i]; call once after the flow completes.
    void finalize();
    double plr(std::uint32_t second) const {
        return sent[second] == 0
                   ? 0.0
                   : static_cast<double>(lost[second]) / static_cast<double>(sent[second]);
    }
    std::uint64_t total_sent() const;
    std::uint64_t total_delivered() const;
    std::uint64_t total_lost() const;
};

struct DelaySample {
    std::uint32_t replica;
    Duration delay;
};

/// Normalized delay histogram: sum over bins of density * width == 1.
struct Histogram {
    struct Bin {
        Duration low;
        Duration high;
        std::uint64_t count;
        double density;  // count / (N * width)
    };
    std::vector<Bin> bins;

    double area() const;
};

/// Equal-width bins spanning [min, max] of the samples. Throws EmptySampleSet.
Histogram build_histogram(const std::vector<DelaySample>& samples,
                          Duration bin_width);

struct PlrPoint {
    double mean;
    double ci_low;
    double ci_high;
};

/// Per-second mean and normal-approximation 95% CI across replicas.
/// Throws InsufficientReplicas for fewer than 2 replicas.
std::vector<PlrPoint> plr_stats(const std::vector<FlowStats>& replicas);

}  // namespace hybond
