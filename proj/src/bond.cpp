#include "hybond/bond.hpp"

#include "hybond/errors.hpp"

namespace hybond {

const char* name(TriggerKind k) {
    switch (k) {
        case TriggerKind::InterfaceShutdown: return "shutdown";
        case TriggerKind::SignalLoss: return "signal-loss";
        case TriggerKind::Manual: return "manual";
        case TriggerKind::Recovery: return "recovery";
    }
    return "?";
}

Bond::Bond(Simulator& sim, BondConfig cfg, PhysIface& lifi, PhysIface& wifi,
           IpAddress bond_ip, Duration lifi_activation, Duration wifi_activation,
           Duration arp_response_delay)
    : sim_(sim),
      cfg_(cfg),
      lifi_(lifi),
      wifi_(wifi),
      bond_ip_(bond_ip),
      lifi_activation_(lifi_activation),
      wifi_activation_(wifi_activation),
      arp_response_delay_(arp_response_delay),
      active_(cfg.primary),
      bond_mac_(iface(cfg.primary).mac()) {
    last_valid_reply_[0] = last_valid_reply_[1] = sim.now();
}

void Bond::start() { schedule_next_tick(sim_.now()); }

void Bond::schedule_next_tick(SimTime t) {
    sim_.schedule(t, [this]() {
        if (cfg_.monitor == Monitor::Mii) {
            mii_tick();
        } else {
            arp_tick();
        }
        schedule_next_tick(sim_.now() + cfg_.interval());
    });
}

void Bond::note_fault(TriggerKind kind, SimTime at) {
    pending_trigger_ = {kind, at};
}

std::pair<TriggerKind, SimTime> Bond::consume_trigger(SimTime fallback_at,
                                                      TriggerKind fallback_kind) {
    if (pending_trigger_) {
        auto trig = *pending_trigger_;
        pending_trigger_.reset();
        return trig;
    }
    return {fallback_kind, fallback_at};
}

bool Bond::backup_available(Technology slave, SimTime t) {
    PhysIface& ifc = iface(slave);
    if (!ifc.admin_up_at(t)) return false;
    // MII trusts the reported carrier; ARP monitoring has no liveness signal
    // for the backup slave and assumes an admin-up interface is usable.
    if (cfg_.monitor == Monitor::Mii && !ifc.carrier_ok(t)) return false;
    return true;
}

void Bond::mii_tick() {
    const SimTime t = sim_.now();
    audit(t);
    if (carrier_less_) {
        // Waiting for any slave to come back; primary preferred.
        for (Technology cand : {cfg_.primary, other(cfg_.primary)}) {
            if (cand != active_ && backup_available(cand, t)) {
                auto trig = withheld_trigger_ ? *withheld_trigger_
                                              : std::pair{TriggerKind::Recovery, t};
                withheld_trigger_.reset();
                carrier_less_ = false;
                begin_transition(cand, trig.first, trig.second, t,
                                 cfg_.switch_overhead);
                break;
            }
        }
        return;
    }
    if (in_transition(t)) return;

    if (!iface(active_).carrier_ok(t)) {
        ++down_ticks_;
        const int needed = cfg_.miimon ? static_cast<int>(cfg_.downdelay / cfg_.miimon) : 0;
        if (down_ticks_ > needed) {
            down_ticks_ = 0;
            initiate_failover(t);
            return;
        }
    } else {
        down_ticks_ = 0;
    }

    // Switch back once the formerly-down primary reports carrier again.
    if (active_ != cfg_.primary && iface(cfg_.primary).carrier_ok(t) &&
        iface(cfg_.primary).admin_up_at(t)) {
        ++up_ticks_;
        const int needed = cfg_.miimon ? static_cast<int>(cfg_.updelay / cfg_.miimon) : 0;
        if (up_ticks_ > needed) {
            up_ticks_ = 0;
            begin_transition(cfg_.primary, TriggerKind::Recovery, t, t,
                             cfg_.switch_overhead);
        }
    } else {
        up_ticks_ = 0;
    }
}

void Bond::send_arp_probe(SimTime t) {
    ArpPacket probe{ArpOp::Request, bond_ip_, cfg_.arp_ip_target, bond_mac_};
    Frame frame;
    frame.src_mac = bond_mac_;
    frame.dst_mac = MacAddress::broadcast();
    frame.ethertype = EtherType::Arp;
    frame.size_bytes = kArpFrameBytes;
    frame.payload = probe;
    iface(active_).transmit(frame, t);
}

void Bond::arp_tick() {
    const SimTime t = sim_.now();
    audit(t);
    if (carrier_less_ || in_transition(t)) return;

    send_arp_probe(t);
    const SimTime deadline = static_cast<SimTime>(cfg_.missed_reply_threshold) *
                             cfg_.arp_interval;
    if (t - last_valid_reply_[index(active_)] >= deadline) {
        initiate_failover(t);
    }
}

void Bond::initiate_failover(SimTime t) {
    const Technology to = other(active_);
    auto trig = consume_trigger(t, TriggerKind::Recovery);
    if (!backup_available(to, t)) {
        // Both slaves gone: the bond is carrier-less and the record is
        // withheld until a slave recovers.
        carrier_less_ = true;
        withheld_trigger_ = trig;
        return;
    }
    begin_transition(to, trig.first, trig.second, t, cfg_.switch_overhead);
}

void Bond::begin_transition(Technology to, TriggerKind trigger, SimTime trigger_at,
                            SimTime t, Duration overhead) {
    const Technology from = active_;
    transition_active_ = true;
    sim_.schedule(t + overhead, [this, from, to, trigger, trigger_at]() {
        complete_switch(from, to, trigger, trigger_at);
    });
}

void Bond::complete_switch(Technology from, Technology to, TriggerKind trigger,
                           SimTime trigger_at) {
    const SimTime t = sim_.now();
    transition_active_ = false;
    active_ = to;
    bond_mac_ = iface(to).mac();  // fail_over_mac=1: adopt the new slave's MAC
    last_valid_reply_[index(to)] = t;
    down_ticks_ = 0;
    up_ticks_ = 0;
    emit_gratuitous_arps(to, t);
    records_.push_back(SwitchRecord{trigger, trigger_at, t, from, to,
                                    t - trigger_at, cfg_.num_grat_arp});
    audit(t);
    if (on_switch_) on_switch_(records_.back());
}

void Bond::emit_gratuitous_arps(Technology slave, SimTime t) {
    // Spaced one monitor tick apart, like the driver emits them.
    for (int i = 0; i < cfg_.num_grat_arp; ++i) {
        const SimTime at = t + static_cast<Duration>(i) * cfg_.interval();
        sim_.schedule(at, [this, slave]() {
            ArpPacket grat{ArpOp::GratuitousReply, bond_ip_, bond_ip_,
                           iface(slave).mac()};
            Frame frame;
            frame.src_mac = iface(slave).mac();
            frame.dst_mac = MacAddress::broadcast();
            frame.ethertype = EtherType::Arp;
            frame.size_bytes = kArpFrameBytes;
            frame.payload = grat;
            iface(slave).transmit(frame, sim_.now());
        });
    }
}

void Bond::manual_switch(SimTime t) {
    const Technology to = other(active_);
    cfg_.primary = to;  // the intentional switch re-designates the primary
    begin_transition(to, TriggerKind::Manual, t, t, activation(to));
}

bool Bond::send_udp(const IpAddress& dst_ip, const UdpDatagram& dgram,
                    std::uint32_t size_bytes, SimTime t) {
    if (carrier_less_ || in_transition(t)) return false;
    auto it = cache_.find(dst_ip);
    if (it == cache_.end()) return false;
    Frame frame;
    frame.src_mac = bond_mac_;
    frame.dst_mac = it->second;
    frame.ethertype = EtherType::IPv4;
    frame.size_bytes = size_bytes;
    frame.payload = dgram;
    return iface(active_).transmit(frame, t) == TxResult::Sent;
}

void Bond::on_frame(Technology slave, const Frame& frame, SimTime t) {
    if (const ArpPacket* arp = frame.arp()) {
        switch (arp->op) {
            case ArpOp::Request:
                cache_[arp->sender_ip] = arp->sender_mac;
                if (arp->target_ip == bond_ip_ && slave == active_ &&
                    !in_transition(t) && !carrier_less_) {
                    ArpPacket reply{ArpOp::Reply, bond_ip_, arp->sender_ip,
                                    bond_mac_};
                    Frame out;
                    out.src_mac = bond_mac_;
                    out.dst_mac = arp->sender_mac;
                    out.ethertype = EtherType::Arp;
                    out.size_bytes = kArpFrameBytes;
                    out.payload = reply;
                    const Technology via = active_;
                    sim_.schedule(t + arp_response_delay_, [this, out, via]() {
                        iface(via).transmit(out, sim_.now());
                    });
                }
                break;
            case ArpOp::Reply:
                cache_[arp->sender_ip] = arp->sender_mac;
                // arp_validate=3: only replies from the configured target,
                // received on the active slave, prove liveness.
                if (arp->sender_ip == cfg_.arp_ip_target && slave == active_ &&
                    !in_transition(t) && !carrier_less_) {
                    last_valid_reply_[index(slave)] = t;
                }
                break;
            case ArpOp::GratuitousReply:
                cache_[arp->sender_ip] = arp->sender_mac;
                break;
        }
        return;
    }
    if (const UdpDatagram* udp = frame.udp()) {
        // active-backup: traffic received on the backup slave is dropped.
        if (slave != active_ || in_transition(t) || carrier_less_) return;
        if (!(frame.dst_mac == bond_mac_ || frame.dst_mac.is_broadcast())) return;
        if (udp_sink_) udp_sink_(*udp, t);
    }
}

void Bond::audit(SimTime t) {
    (void)t;
    // Exactly-one-active is structural (active_ is a plain enum); the MAC
    // coherence half can drift if a code path forgets the takeover.
    if (!(bond_mac_ == iface(active_).mac())) ++invariant_violations_;
}

}  // namespace hybond
