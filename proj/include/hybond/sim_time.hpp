#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace hybond {

/// Virtual time in microseconds since scenario start. 1 us resolution keeps
/// every ms-scale quantity exact and quantization error negligible.
using SimTime = std::uint64_t;
using Duration = std::uint64_t;

constexpr Duration kMicrosecond = 1;
constexpr Duration kMillisecond = 1000;
constexpr Duration kSecond = 1'000'000;

constexpr Duration ms(std::uint64_t v) { return v * kMillisecond; }
constexpr Duration sec(std::uint64_t v) { return v * kSecond; }

/// Sentinel for "has not happened / will not happen".
constexpr SimTime kNever = std::numeric_limits<SimTime>::max();

/// Round x up to the next multiple of period (period == 0 -> identity).
constexpr SimTime quantize_up(SimTime x, Duration period) {
    if (period == 0) return x;
    const SimTime rem = x % period;
    return rem == 0 ? x : x + (period - rem);
}

/// Parses "250us", "20ms", "2.5s" or a bare microsecond count.
Duration parse_duration(const std::string& text);

/// Canonical form used by the scenario serializer: integer microseconds.
std::string format_duration(Duration d);

}  // namespace hybond
