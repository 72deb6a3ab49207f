#include "hybond/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hybond/errors.hpp"

namespace hybond {

void FlowStats::finalize() {
    for (std::size_t i = 0; i < sent.size(); ++i) {
        lost[i] = sent[i] - delivered[i];
    }
}

std::uint64_t FlowStats::total_sent() const {
    return std::accumulate(sent.begin(), sent.end(), std::uint64_t{0});
}
std::uint64_t FlowStats::total_delivered() const {
    return std::accumulate(delivered.begin(), delivered.end(), std::uint64_t{0});
}
std::uint64_t FlowStats::total_lost() const {
    return std::accumulate(lost.begin(), lost.end(), std::uint64_t{0});
}

double Histogram::area() const {
    double a = 0.0;
    for (const Bin& b : bins) {
        a += b.density * static_cast<double>(b.high - b.low);
    }
    return a;
}

Histogram build_histogram(const std::vector<DelaySample>& samples,
                          Duration bin_width) {
    if (samples.empty()) throw EmptySampleSet("no delay samples to bin");
    if (bin_width == 0) throw EmptySampleSet("bin width must be positive");

    Duration lo = samples.front().delay;
    Duration hi = samples.front().delay;
    for (const DelaySample& s : samples) {
        lo = std::min(lo, s.delay);
        hi = std::max(hi, s.delay);
    }
    const Duration span = hi - lo;
    const std::size_t n_bins =
        span == 0 ? 1 : static_cast<std::size_t>((span + bin_width - 1) / bin_width);

    Histogram h;
    h.bins.resize(n_bins);
    for (std::size_t b = 0; b < n_bins; ++b) {
        h.bins[b].low = lo + b * bin_width;
        h.bins[b].high = lo + (b + 1) * bin_width;
        h.bins[b].count = 0;
    }
    for (const DelaySample& s : samples) {
        std::size_t b = static_cast<std::size_t>((s.delay - lo) / bin_width);
        if (b >= n_bins) b = n_bins - 1;  // sample at the top edge
        ++h.bins[b].count;
    }
    const double norm =
        static_cast<double>(samples.size()) * static_cast<double>(bin_width);
    for (Histogram::Bin& b : h.bins) {
        b.density = static_cast<double>(b.count) / norm;
    }
    return h;
}

std::vector<PlrPoint> plr_stats(const std::vector<FlowStats>& replicas) {
    if (replicas.size() < 2) {
        throw InsufficientReplicas("plr_stats needs at least 2 replicas");
    }
    const std::size_t seconds = replicas.front().sent.size();
    for (const FlowStats& r : replicas) {
        if (r.sent.size() != seconds) {
            throw InsufficientReplicas("replicas have unequal durations");
        }
    }
    const double n = static_cast<double>(replicas.size());
    std::vector<PlrPoint> out(seconds);
    for (std::size_t s = 0; s < seconds; ++s) {
        double mean = 0.0;
        for (const FlowStats& r : replicas) mean += r.plr(static_cast<std::uint32_t>(s));
        mean /= n;
        double var = 0.0;
        for (const FlowStats& r : replicas) {
            const double d = r.plr(static_cast<std::uint32_t>(s)) - mean;
            var += d * d;
        }
        var /= (n - 1.0);
        const double half = 1.96 * std::sqrt(var / n);
        out[s] = PlrPoint{mean, mean - half, mean + half};
    }
    return out;
}

}  // namespace hybond
