#pragma once

// Brute-force reference for the switch-delay logic, deliberately independent
// of the event-driven engine: it walks virtual time in 1 ms steps and applies
// the monitoring rules directly. Used as the equivalence oracle.

#include <cstdint>

#include "hybond/sim_time.hpp"

namespace refmodel {

struct Params {
    bool mii = true;                    // false = ARP monitoring
    hybond::Duration interval = 0;      // monitor period T (multiple of 1 ms)
    int missed = 2;                     // ARP missed-reply threshold K
    hybond::Duration downdelay = 0;     // MII down filter
    hybond::Duration overhead = 0;      // detection -> flip cost
    hybond::Duration rtt = 0;           // ARP probe round trip
    hybond::Duration poll = 0;          // faulted slave's carrier poll grid
    bool shutdown = true;               // false = signal loss
    hybond::SimTime fault_at = 0;
    hybond::Duration detect_delay = 0;  // signal-loss carrier latency draw
    hybond::SimTime horizon = 0;
};

/// Completion time of the first failover, or hybond::kNever if none occurs
/// before the horizon.
inline hybond::SimTime switch_completion(const Params& p) {
    using hybond::SimTime;
    const SimTime raw_flip = p.shutdown ? p.fault_at : p.fault_at + p.detect_delay;
    const SimTime flip = hybond::quantize_up(raw_flip, p.poll);

    SimTime last_reply = 0;
    int down_ticks = 0;
    const int needed =
        p.mii ? static_cast<int>(p.downdelay / p.interval) : 0;

    for (SimTime t = 0; t <= p.horizon; t += hybond::kMillisecond) {
        if (t % p.interval != 0) continue;  // not a monitor tick
        if (p.mii) {
            if (t >= flip) {
                ++down_ticks;
                if (down_ticks > needed) return t + p.overhead;
            } else {
                down_ticks = 0;
            }
        } else {
            // The tick first emits a probe, then evaluates the age rule, so
            // this tick's own reply cannot save it.
            if (t - last_reply >=
                static_cast<SimTime>(p.missed) * p.interval) {
                return t + p.overhead;
            }
            // The probe's validated reply lands at t + rtt iff the wireless
            // path survives the full round trip.
            if (t + p.rtt < p.fault_at) last_reply = t + p.rtt;
        }
    }
    return hybond::kNever;
}

}  // namespace refmodel
