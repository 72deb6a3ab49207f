#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hybond/engine.hpp"
#include "hybond/net_types.hpp"
#include "hybond/sim_time.hpp"

namespace hybond {

/// MAC learning table of the ethernet switch. Entries never expire within a
/// scenario; gratuitous ARPs, not aging, re-route traffic after a failover.
class ForwardingTable {
  public:
    struct Entry {
        PortId port;
        SimTime learned_at;
    };

    void learn(const MacAddress& mac, PortId port, SimTime t) {
        table_[mac] = Entry{port, t};
    }
    std::optional<Entry> lookup(const MacAddress& mac) const {
        auto it = table_.find(mac);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return table_.size(); }

  private:
    std::unordered_map<MacAddress, Entry, MacHash> table_;
};

/// Transparent learning bridge. The LiFi and WiFi APs are folded into their
/// switch ports: a port's sink is either a host or the wireless path down to
/// one of the bond slaves.
class LanSwitch {
  public:
    using Sink = std::function<void(const Frame&, SimTime)>;

    explicit LanSwitch(Simulator& sim) : sim_(sim) {}

    /// egress_delay is added to every delivery leaving through this port.
    PortId add_port(Duration egress_delay, Sink sink);

    /// Frame present at the switch at time t: learn src, then unicast to the
    /// learned port or flood everywhere except the ingress port.
    void ingress(PortId from, const Frame& frame, SimTime t);

    const ForwardingTable& table() const { return table_; }
    ForwardingTable& table() { return table_; }

  private:
    void deliver(PortId port, const Frame& frame, SimTime t);

    struct Port {
        Duration egress_delay;
        Sink sink;
    };
    Simulator& sim_;
    std::vector<Port> ports_;
    ForwardingTable table_;
};

/// A wired fabric host (the control PC / traffic endpoint). Owns one IP, one
/// MAC, an ARP cache, and answers ARP requests for its own address after a
/// fixed response delay.
class Host {
  public:
    using ResolveCallback = std::function<void(std::optional<MacAddress>, SimTime)>;
    using UdpSink = std::function<void(const UdpDatagram&, SimTime)>;

    Host(Simulator& sim, LanSwitch& lan, IpAddress ip, MacAddress mac,
         Duration link_delay, Duration response_delay, Duration resolve_timeout)
        : sim_(sim),
          lan_(lan),
          ip_(ip),
          mac_(mac),
          link_delay_(link_delay),
          response_delay_(response_delay),
          resolve_timeout_(resolve_timeout) {}

    void attach(PortId port) { port_ = port; }
    PortId port() const { return port_; }
    const IpAddress& ip() const { return ip_; }
    const MacAddress& mac() const { return mac_; }

    /// Frame delivered to this host by the switch.
    void on_frame(const Frame& frame, SimTime t);

    /// Cached binding, if any.
    std::optional<MacAddress> cached(const IpAddress& ip) const;

    /// Seed the cache (scenario warm-up).
    void warm_cache(const IpAddress& ip, const MacAddress& mac) { cache_[ip] = mac; }

    /// Resolve ip to a MAC. A warm cache answers immediately; otherwise an
    /// ARP exchange runs and the callback fires on reply or on timeout
    /// (std::nullopt) after resolve_timeout. Without a callback a timeout
    /// throws ResolutionTimeout out of the event loop instead.
    void resolve(const IpAddress& ip, ResolveCallback cb = nullptr);

    /// Emit a UDP datagram toward `dst_ip` using the cached binding. Returns
    /// false (and sends nothing) when the binding is unknown.
    bool send_udp(const IpAddress& dst_ip, const UdpDatagram& dgram,
                  std::uint32_t size_bytes, SimTime t);

    void set_udp_sink(UdpSink sink) { udp_sink_ = std::move(sink); }

  private:
    void send(const Frame& frame, SimTime t);
    void update_binding(const IpAddress& ip, const MacAddress& mac, SimTime t);

    Simulator& sim_;
    LanSwitch& lan_;
    IpAddress ip_;
    MacAddress mac_;
    Duration link_delay_;
    Duration response_delay_;
    Duration resolve_timeout_;
    PortId port_ = kNoPort;
    std::unordered_map<IpAddress, MacAddress, IpHash> cache_;
    struct PendingResolve {
        IpAddress ip;
        ResolveCallback cb;
        EventId timeout_event;
    };
    std::vector<PendingResolve> pending_;
    UdpSink udp_sink_;
};

}  // namespace hybond
