#pragma once

#include <optional>
#include <vector>

#include "hybond/bond.hpp"
#include "hybond/metrics.hpp"
#include "hybond/scenario.hpp"

namespace hybond {

/// Outcome of one independent randomized repetition of a scenario.
struct ReplicaResult {
    std::uint32_t index = 0;
    SimTime fault_at = 0;  // actual (phase-randomized) injection time
    std::vector<SwitchRecord> switches;
    std::optional<FlowStats> flow;
    std::uint64_t events_processed = 0;
    std::uint64_t invariant_violations = 0;
    bool event_conservation_ok = true;

    const SwitchRecord* first_switch() const {
        return switches.empty() ? nullptr : &switches.front();
    }
};

/// Builds the whole replica world (engine, slaves, bridged LAN, bond, fault,
/// flow), runs it to the scenario horizon, and returns the measurements.
/// Replica k draws its randomness from (scenario seed, k).
ReplicaResult run_replica(const Scenario& s, std::uint32_t index);

}  // namespace hybond
