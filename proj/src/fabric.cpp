#include "hybond/fabric.hpp"

#include <algorithm>

#include "hybond/errors.hpp"

namespace hybond {

PortId LanSwitch::add_port(Duration egress_delay, Sink sink) {
    ports_.push_back(Port{egress_delay, std::move(sink)});
    return static_cast<PortId>(ports_.size() - 1);
}

void LanSwitch::deliver(PortId port, const Frame& frame, SimTime t) {
    const Port& p = ports_[static_cast<std::size_t>(port)];
    Frame copy = frame;
    copy.ingress_port = kNoPort;
    if (p.egress_delay == 0) {
        if (p.sink) p.sink(copy, t);
        return;
    }
    sim_.schedule(t + p.egress_delay, [this, port, copy]() {
        const Port& dst = ports_[static_cast<std::size_t>(port)];
        if (dst.sink) dst.sink(copy, sim_.now());
    });
}

void LanSwitch::ingress(PortId from, const Frame& frame, SimTime t) {
    table_.learn(frame.src_mac, from, t);
    if (!frame.dst_mac.is_broadcast()) {
        if (auto entry = table_.lookup(frame.dst_mac)) {
            if (entry->port != from) deliver(entry->port, frame, t);
            return;
        }
    }
    // Broadcast or unknown unicast: flood all ports except the ingress one.
    for (PortId p = 0; p < static_cast<PortId>(ports_.size()); ++p) {
        if (p != from) deliver(p, frame, t);
    }
}

void Host::update_binding(const IpAddress& ip, const MacAddress& mac, SimTime t) {
    cache_[ip] = mac;
    // Fire any resolve waiting on this binding.
    for (auto it = pending_.begin(); it != pending_.end();) {
        if (it->ip == ip) {
            sim_.cancel(it->timeout_event);
            auto cb = std::move(it->cb);
            it = pending_.erase(it);
            cb(mac, t);
        } else {
            ++it;
        }
    }
}

void Host::on_frame(const Frame& frame, SimTime t) {
    if (const ArpPacket* arp = frame.arp()) {
        switch (arp->op) {
            case ArpOp::Request:
                // Standard ARP learning from the request itself.
                update_binding(arp->sender_ip, arp->sender_mac, t);
                if (arp->target_ip == ip_) {
                    ArpPacket reply{ArpOp::Reply, ip_, arp->sender_ip, mac_};
                    Frame out;
                    out.src_mac = mac_;
                    out.dst_mac = arp->sender_mac;
                    out.ethertype = EtherType::Arp;
                    out.size_bytes = kArpFrameBytes;
                    out.payload = reply;
                    sim_.schedule(t + response_delay_,
                                  [this, out]() { send(out, sim_.now()); });
                }
                break;
            case ArpOp::Reply:
            case ArpOp::GratuitousReply:
                // Last writer wins: the newest binding overwrites the cache.
                update_binding(arp->sender_ip, arp->sender_mac, t);
                break;
        }
        return;
    }
    if (const UdpDatagram* udp = frame.udp()) {
        if (frame.dst_mac == mac_ && udp_sink_) udp_sink_(*udp, t);
    }
}

std::optional<MacAddress> Host::cached(const IpAddress& ip) const {
    auto it = cache_.find(ip);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
}

void Host::resolve(const IpAddress& ip, ResolveCallback cb) {
    if (auto mac = cached(ip)) {
        cb(*mac, sim_.now());
        return;
    }
    const SimTime t = sim_.now();
    ArpPacket request{ArpOp::Request, ip_, ip, mac_};
    Frame out;
    out.src_mac = mac_;
    out.dst_mac = MacAddress::broadcast();
    out.ethertype = EtherType::Arp;
    out.size_bytes = kArpFrameBytes;
    out.payload = request;
    send(out, t);

    const IpAddress wanted = ip;
    EventId timeout = sim_.schedule(t + resolve_timeout_, [this, wanted]() {
        for (auto it = pending_.begin(); it != pending_.end(); ++it) {
            if (it->ip == wanted) {
                auto cb2 = std::move(it->cb);
                pending_.erase(it);
                if (!cb2) throw ResolutionTimeout("no ARP reply for " + wanted.str());
                cb2(std::nullopt, sim_.now());
                return;
            }
        }
    });
    pending_.push_back(PendingResolve{ip, std::move(cb), timeout});
}

bool Host::send_udp(const IpAddress& dst_ip, const UdpDatagram& dgram,
                    std::uint32_t size_bytes, SimTime t) {
    auto mac = cached(dst_ip);
    if (!mac) return false;
    Frame out;
    out.src_mac = mac_;
    out.dst_mac = *mac;
    out.ethertype = EtherType::IPv4;
    out.size_bytes = size_bytes;
    out.payload = dgram;
    send(out, t);
    return true;
}

void Host::send(const Frame& frame, SimTime t) {
    Frame copy = frame;
    if (link_delay_ == 0) {
        lan_.ingress(port_, copy, t);
        return;
    }
    sim_.schedule(t + link_delay_,
                  [this, copy]() { lan_.ingress(port_, copy, sim_.now()); });
}

}  // namespace hybond
