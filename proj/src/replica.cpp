#include "hybond/replica.hpp"

#include "hybond/engine.hpp"
#include "hybond/fabric.hpp"
#include "hybond/phy.hpp"
#include "hybond/rng.hpp"

namespace hybond {

namespace {
const MacAddress kControlMac = MacAddress::parse("02:00:00:00:00:10");
}

ReplicaResult run_replica(const Scenario& s, std::uint32_t index) {
    Simulator sim;
    ReplicaRng rng(s.seed, index);

    PhysIface lifi(sim, Technology::LiFi, s.lifi.mac, s.lifi.carrier,
                   s.lifi.hop_delay);
    PhysIface wifi(sim, Technology::WiFi, s.wifi.mac, s.wifi.carrier,
                   s.wifi.hop_delay);

    LanSwitch lan(sim);
    Host control(sim, lan, s.control_ip, kControlMac, s.control_link_delay,
                 s.host_response_delay, s.resolve_timeout);

    // APs are transparent bridges: each one is a switch port whose sink is
    // the wireless path down to the matching slave.
    const PortId lifi_port =
        lan.add_port(0, [&](const Frame& f, SimTime t) { lifi.deliver_from_ap(f, t); });
    const PortId wifi_port =
        lan.add_port(0, [&](const Frame& f, SimTime t) { wifi.deliver_from_ap(f, t); });
    const PortId control_port = lan.add_port(
        s.control_link_delay, [&](const Frame& f, SimTime t) { control.on_frame(f, t); });
    control.attach(control_port);

    Bond bond(sim, s.bond, lifi, wifi, s.bond_ip, s.lifi.activation_delay,
              s.wifi.activation_delay, s.host_response_delay);
    lifi.set_uplink([&](const Frame& f, SimTime t) { lan.ingress(lifi_port, f, t); });
    wifi.set_uplink([&](const Frame& f, SimTime t) { lan.ingress(wifi_port, f, t); });
    lifi.set_rx([&](const Frame& f, SimTime t) { bond.on_frame(Technology::LiFi, f, t); });
    wifi.set_rx([&](const Frame& f, SimTime t) { bond.on_frame(Technology::WiFi, f, t); });

    // Warm-up: caches and forwarding tables are hot before any flow starts.
    control.warm_cache(s.bond_ip, s.iface(s.bond.primary).mac);
    bond.warm_cache(s.control_ip, kControlMac);
    lan.table().learn(kControlMac, control_port, 0);
    lan.table().learn(s.lifi.mac, lifi_port, 0);
    lan.table().learn(s.wifi.mac, wifi_port, 0);

    bond.start();

    ReplicaResult result;
    result.index = index;

    // At most one fault per replica, injected at a uniformly random phase.
    if (s.fault.kind != FaultKind::None) {
        const SimTime fault_at = rng.uniform_phase(s.fault.at, s.fault.window);
        result.fault_at = fault_at;
        Duration detect_delay = 0;
        if (s.fault.kind == FaultKind::SignalLoss) {
            const CarrierModel& cm = s.iface(s.fault.target).carrier;
            detect_delay = rng.uniform_us(cm.detect_latency_min, cm.detect_latency_max);
        }
        sim.schedule(fault_at, [&, fault_at, detect_delay]() {
            switch (s.fault.kind) {
                case FaultKind::InterfaceShutdown:
                    bond.note_fault(TriggerKind::InterfaceShutdown, fault_at);
                    (s.fault.target == Technology::LiFi ? lifi : wifi)
                        .apply_shutdown(fault_at);
                    break;
                case FaultKind::SignalLoss:
                    bond.note_fault(TriggerKind::SignalLoss, fault_at);
                    (s.fault.target == Technology::LiFi ? lifi : wifi)
                        .apply_signal_loss(fault_at, detect_delay);
                    break;
                case FaultKind::ManualSwitch:
                    bond.manual_switch(fault_at);
                    break;
                case FaultKind::None:
                    break;
            }
        });
    }

    FlowStats stats(s.flow_enabled ? s.flow.duration_seconds() : 0);
    // emit must outlive the event loop: scheduled packets hold a reference.
    std::function<void(std::uint64_t)> emit;
    if (s.flow_enabled) {
        const Duration gap = s.flow.inter_packet_gap();
        auto second_of = [gap](std::uint64_t k) {
            return static_cast<std::uint32_t>(k * gap / kSecond);
        };
        if (s.flow.direction == Direction::Downlink) {
            bond.set_udp_sink([&stats, second_of](const UdpDatagram& d, SimTime) {
                ++stats.delivered[second_of(d.packet_index)];
            });
        } else {
            control.set_udp_sink([&stats, second_of](const UdpDatagram& d, SimTime) {
                ++stats.delivered[second_of(d.packet_index)];
            });
        }
        // Chained emission keeps the event heap small.
        emit = [&, gap](std::uint64_t k) {
            const SimTime t = sim.now();
            ++stats.sent[static_cast<std::uint32_t>(k * gap / kSecond)];
            UdpDatagram dgram{0, k};
            if (s.flow.direction == Direction::Downlink) {
                control.send_udp(s.bond_ip, dgram, s.flow.packet_size_bytes, t);
            } else {
                bond.send_udp(s.control_ip, dgram, s.flow.packet_size_bytes, t);
            }
            if (k + 1 < s.flow.total_packets()) {
                sim.schedule(t + gap, [&emit, k]() { emit(k + 1); });
            }
        };
        sim.schedule(s.flow.start_at, [&emit]() { emit(0); });
    }

    sim.run_until(s.duration);

    if (s.flow_enabled) {
        stats.finalize();
        result.flow = std::move(stats);
    }
    result.switches = bond.records();
    result.events_processed = sim.processed_count();
    result.invariant_violations = bond.invariant_violations();
    result.event_conservation_ok =
        sim.scheduled_count() ==
        sim.processed_count() + sim.cancelled_count() + sim.pending_count();
    return result;
}

}  // namespace hybond
