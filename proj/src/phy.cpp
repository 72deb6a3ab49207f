#include "hybond/phy.hpp"

namespace hybond {

void PhysIface::apply_shutdown(SimTime t) {
    if (!admin_up_at(t)) {
        throw AlreadyDown(std::string(name(tech_)) + " interface already down");
    }
    admin_down_at_ = t;
    // With an internal poll period the driver's exported flag only changes on
    // the poll grid, even for an admin-down.
    const SimTime reported = quantize_up(t, model_.internal_poll_period);
    if (reported < carrier_lost_at_) carrier_lost_at_ = reported;
}

void PhysIface::apply_signal_loss(SimTime t, Duration detect_delay) {
    if (!medium_present_at(t)) {
        throw AlreadySignalLost(std::string(name(tech_)) + " signal already lost");
    }
    medium_lost_at_ = t;
    const SimTime reported = quantize_up(t + detect_delay, model_.internal_poll_period);
    if (reported < carrier_lost_at_) carrier_lost_at_ = reported;
}

TxResult PhysIface::transmit(const Frame& frame, SimTime t) {
    if (!admin_up_at(t) || !medium_present_at(t)) return TxResult::Lost;
    Frame copy = frame;
    sim_.schedule(t + hop_delay_, [this, copy]() {
        const SimTime arrival = sim_.now();
        // In-flight kill: a fault between emission and arrival drops the frame.
        if (!admin_up_at(arrival) || !medium_present_at(arrival)) return;
        if (to_ap_) to_ap_(copy, arrival);
    });
    return TxResult::Sent;
}

void PhysIface::deliver_from_ap(const Frame& frame, SimTime t) {
    Frame copy = frame;
    sim_.schedule(t + hop_delay_, [this, copy]() {
        const SimTime arrival = sim_.now();
        if (!admin_up_at(arrival) || !medium_present_at(arrival)) return;
        if (rx_) rx_(copy, arrival);
    });
}

}  // namespace hybond
