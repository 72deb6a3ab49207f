#pragma once

#include <cstdint>
#include <string>

#include "hybond/bond.hpp"
#include "hybond/metrics.hpp"
#include "hybond/net_types.hpp"
#include "hybond/phy.hpp"
#include "hybond/sim_time.hpp"

namespace hybond {

struct IfaceParams {
    MacAddress mac;
    CarrierModel carrier;
    Duration activation_delay = ms(3);  // manual-switch bring-up cost
    Duration hop_delay = ms(1);         // one wireless hop, iface <-> AP
};

enum class FaultKind { None, InterfaceShutdown, SignalLoss, ManualSwitch };

struct FaultSpec {
    FaultKind kind = FaultKind::None;
    Technology target = Technology::LiFi;  // unused for ManualSwitch
    SimTime at = 0;                        // nominal injection time
    Duration window = 0;                   // uniform phase-randomization window
};

/// Everything one campaign needs: topology, bond config, carrier models,
/// fault template, optional flow, replica count and seed.
struct Scenario {
    std::string name = "scenario";
    Duration duration = sec(15);
    std::uint32_t replicas = 600;
    std::uint64_t seed = 1;
    Duration histogram_bin_width = ms(25);

    BondConfig bond;
    IfaceParams lifi;
    IfaceParams wifi;

    IpAddress bond_ip;
    IpAddress control_ip;
    Duration control_link_delay = 500;   // us, PC <-> switch
    Duration host_response_delay = 500;  // us, ARP reply turnaround
    Duration resolve_timeout = sec(1);

    FaultSpec fault;

    bool flow_enabled = false;
    FlowSpec flow;

    const IfaceParams& iface(Technology t) const {
        return t == Technology::LiFi ? lifi : wifi;
    }
};

/// Baseline scenario with the calibrated default carrier models and
/// addressing; presets and tests start from this.
Scenario default_scenario();

/// Parses the sectioned key-value scenario document. Throws ParseError for
/// malformed text and ValidationError for bad values or unknown keys.
Scenario load_config(const std::string& text);

/// Canonical serialization; load_config(serialize(s)) round-trips.
std::string serialize(const Scenario& s);

/// Throws ValidationError unless the scenario satisfies every invariant
/// (active-backup only, arp_validate=3, fail_over_mac=1, monitor interval
/// set, fault window inside the duration, ...).
void validate(const Scenario& s);

/// FNV-1a of the canonical serialization, as a stable scenario identity.
std::uint64_t digest(const Scenario& s);

}  // namespace hybond
