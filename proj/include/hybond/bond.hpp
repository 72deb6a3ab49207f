#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hybond/engine.hpp"
#include "hybond/net_types.hpp"
#include "hybond/phy.hpp"
#include "hybond/sim_time.hpp"

namespace hybond {

enum class Monitor { Arp, Mii };
enum class TriggerKind { InterfaceShutdown, SignalLoss, Manual, Recovery };

const char* name(TriggerKind k);

/// Bonding driver parameters (active-backup mode only). Key names follow the
/// driver's own vocabulary so scenario files read like a bonding config.
struct BondConfig {
    Monitor monitor = Monitor::Mii;
    Technology primary = Technology::LiFi;
    Duration arp_interval = 0;  // T for ARP monitoring
    IpAddress arp_ip_target;
    int arp_validate = 3;  // only 3 supported
    Duration miimon = 0;   // T for MII monitoring
    Duration downdelay = 0;
    Duration updelay = 0;
    int fail_over_mac = 1;  // only 1 supported
    int num_grat_arp = 2;
    int missed_reply_threshold = 2;      // K: missed-reply count before down
    Duration switch_overhead = ms(3);    // epsilon: detection -> slave flip

    Duration interval() const {
        return monitor == Monitor::Arp ? arp_interval : miimon;
    }
};

/// One completed failover.
struct SwitchRecord {
    TriggerKind trigger;
    SimTime trigger_at;
    SimTime completed_at;
    Technology from;
    Technology to;
    Duration delay;  // completed_at - trigger_at
    int grat_arps_emitted;
};

/// Active-backup bond over one LiFi and one WiFi slave.
///
/// The bond designates exactly one active slave at all times. During a switch
/// there is a short transition window [initiation, completion) in which the
/// designation still points at the outgoing slave but the bond neither
/// transmits nor accepts traffic; the flip, the MAC takeover and the
/// gratuitous ARPs all happen at completion.
class Bond {
  public:
    using UdpSink = std::function<void(const UdpDatagram&, SimTime)>;
    using SwitchCallback = std::function<void(const SwitchRecord&)>;

    Bond(Simulator& sim, BondConfig cfg, PhysIface& lifi, PhysIface& wifi,
         IpAddress bond_ip, Duration lifi_activation, Duration wifi_activation,
         Duration arp_response_delay);

    /// Schedules the monitor tick chain starting at the current clock.
    void start();

    /// Frame that survived the wireless hop on `slave`.
    void on_frame(Technology slave, const Frame& frame, SimTime t);

    /// Measurement anchor: the harness tells the bond when the fault it is
    /// about to detect was injected, so SwitchRecord.trigger_at reports the
    /// fault time rather than the detection tick.
    void note_fault(TriggerKind kind, SimTime at);

    /// Intentional switch: flips the primary designation and fails over
    /// immediately. Requires both slaves up.
    void manual_switch(SimTime t);

    /// Emit a UDP datagram through the active slave. Returns false when the
    /// bond cannot transmit (transition window or no usable slave).
    bool send_udp(const IpAddress& dst_ip, const UdpDatagram& dgram,
                  std::uint32_t size_bytes, SimTime t);

    void warm_cache(const IpAddress& ip, const MacAddress& mac) {
        cache_[ip] = mac;
    }
    void set_udp_sink(UdpSink sink) { udp_sink_ = std::move(sink); }
    void set_switch_callback(SwitchCallback cb) { on_switch_ = std::move(cb); }

    Technology active_slave() const { return active_; }
    Technology primary() const { return cfg_.primary; }
    const MacAddress& bond_mac() const { return bond_mac_; }
    bool carrier_less() const { return carrier_less_; }
    // Flag-based rather than time-based: a tick firing on the very
    // microsecond the transition completes must still see it as pending
    // (same-instant events run FIFO, and the tick was scheduled first).
    bool in_transition(SimTime) const { return transition_active_; }
    const std::vector<SwitchRecord>& records() const { return records_; }
    const BondConfig& config() const { return cfg_; }

    /// Coherence audit, run at every tick and completion: exactly one active
    /// slave designated and (fail_over_mac=1) bond MAC == active slave MAC.
    std::uint64_t invariant_violations() const { return invariant_violations_; }

    SimTime last_valid_reply_at(Technology slave) const {
        return last_valid_reply_[index(slave)];
    }

  private:
    static int index(Technology t) { return t == Technology::LiFi ? 0 : 1; }
    PhysIface& iface(Technology t) {
        return t == Technology::LiFi ? lifi_ : wifi_;
    }
    Duration activation(Technology t) const {
        return t == Technology::LiFi ? lifi_activation_ : wifi_activation_;
    }

    void mii_tick();
    void arp_tick();
    void schedule_next_tick(SimTime t);
    bool backup_available(Technology slave, SimTime t);
    void initiate_failover(SimTime t);
    void begin_transition(Technology to, TriggerKind trigger, SimTime trigger_at,
                          SimTime t, Duration overhead);
    void complete_switch(Technology from, Technology to, TriggerKind trigger,
                         SimTime trigger_at);
    void emit_gratuitous_arps(Technology slave, SimTime t);
    void send_arp_probe(SimTime t);
    void audit(SimTime t);
    std::pair<TriggerKind, SimTime> consume_trigger(SimTime fallback_at,
                                                    TriggerKind fallback_kind);

    Simulator& sim_;
    BondConfig cfg_;
    PhysIface& lifi_;
    PhysIface& wifi_;
    IpAddress bond_ip_;
    Duration lifi_activation_;
    Duration wifi_activation_;
    Duration arp_response_delay_;

    Technology active_;
    MacAddress bond_mac_;
    bool transition_active_ = false;
    bool carrier_less_ = false;
    SimTime last_valid_reply_[2] = {0, 0};
    int down_ticks_ = 0;
    int up_ticks_ = 0;
    std::optional<std::pair<TriggerKind, SimTime>> pending_trigger_;
    std::optional<std::pair<TriggerKind, SimTime>> withheld_trigger_;
    std::unordered_map<IpAddress, MacAddress, IpHash> cache_;
    std::vector<SwitchRecord> records_;
    UdpSink udp_sink_;
    SwitchCallback on_switch_;
    std::uint64_t invariant_violations_ = 0;
};

}  // namespace hybond
