#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "hybond/engine.hpp"
#include "hybond/errors.hpp"
#include "hybond/net_types.hpp"
#include "hybond/sim_time.hpp"

namespace hybond {

enum class Technology { LiFi, WiFi };

inline Technology other(Technology t) {
    return t == Technology::LiFi ? Technology::WiFi : Technology::LiFi;
}
inline const char* name(Technology t) {
    return t == Technology::LiFi ? "lifi" : "wifi";
}

/// How fast the interface driver notices that the medium is gone.
///
/// An admin shutdown is noticed immediately (the device bus is gone, not the
/// medium). A signal loss is noticed after a uniform delay in
/// [detect_latency_min, detect_latency_max]. If internal_poll_period is set,
/// the reported carrier flag only changes on that period's grid, which is what
/// lumps the delay histograms into discrete peaks.
struct CarrierModel {
    Duration detect_latency_min = 0;
    Duration detect_latency_max = 0;
    Duration internal_poll_period = 0;  // 0 = continuous tracking
};

enum class TxResult { Sent, Lost };

/// One simulated physical interface (the bond slave). State transitions are
/// recorded as timestamps so that queries at time t are order-independent:
/// a monitor tick and a carrier flip landing on the same microsecond always
/// agree regardless of event sequence.
class PhysIface {
  public:
    using DeliverFn = std::function<void(const Frame&, SimTime)>;

    PhysIface(Simulator& sim, Technology tech, MacAddress mac, CarrierModel model,
              Duration hop_delay)
        : sim_(sim), tech_(tech), mac_(mac), model_(model), hop_delay_(hop_delay) {}

    Technology technology() const { return tech_; }
    const MacAddress& mac() const { return mac_; }
    const CarrierModel& carrier_model() const { return model_; }
    Duration hop_delay() const { return hop_delay_; }

    /// Frames leaving the interface land here (the attached AP port).
    void set_uplink(DeliverFn fn) { to_ap_ = std::move(fn); }
    /// Frames surviving the inbound wireless hop land here (the bond).
    void set_rx(DeliverFn fn) { rx_ = std::move(fn); }

    bool admin_up_at(SimTime t) const { return t < admin_down_at_; }
    bool medium_present_at(SimTime t) const { return t < medium_lost_at_; }

    /// netif_carrier_ok(): pure query of the driver-reported carrier flag.
    bool carrier_ok(SimTime t) const { return t < carrier_lost_at_; }

    /// Admin shutdown: the interface disappears from the bus at t.
    void apply_shutdown(SimTime t);

    /// Medium loss: transmissions die at t, the reported carrier follows
    /// after the detection latency `detect_delay` (sampled by the caller),
    /// rounded up to the internal poll grid when one is configured.
    void apply_signal_loss(SimTime t, Duration detect_delay);

    /// Uplink transmission. Lost if the interface is down or the medium is
    /// gone at emission; otherwise the frame arrives at the AP after
    /// hop_delay, unless a fault kills it in flight.
    TxResult transmit(const Frame& frame, SimTime t);

    /// Downlink delivery from the AP: the frame crosses the wireless hop and
    /// reaches the interface only if the medium and the interface survive
    /// until arrival.
    void deliver_from_ap(const Frame& frame, SimTime t);

    SimTime carrier_lost_at() const { return carrier_lost_at_; }

  private:
    Simulator& sim_;
    Technology tech_;
    MacAddress mac_;
    CarrierModel model_;
    Duration hop_delay_;
    DeliverFn to_ap_;
    DeliverFn rx_;
    SimTime admin_down_at_ = kNever;
    SimTime medium_lost_at_ = kNever;
    SimTime carrier_lost_at_ = kNever;
};

}  // namespace hybond
