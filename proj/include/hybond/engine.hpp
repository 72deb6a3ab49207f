#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "hybond/errors.hpp"
#include "hybond/sim_time.hpp"

namespace hybond {

using EventId = std::uint64_t;

/// Single-threaded discrete-event core. One instance owns all the mutable
/// state of a replica; separate replicas use separate instances.
///
/// Ordering contract: events fire in (fire_at, insertion sequence) order, so
/// two events at the same instant are processed FIFO.
class Simulator {
  public:
    using Handler = std::function<void()>;

    /// Enqueues a handler at `fire_at`. Throws SchedulingInPast if fire_at
    /// is before the current clock.
    EventId schedule(SimTime fire_at, Handler handler);

    /// Removes a pending event. Returns false if the id already fired, was
    /// cancelled, or is unknown.
    bool cancel(EventId id);

    /// Processes every event with fire_at <= t_end, then advances the clock
    /// to t_end. Returns the number of events processed by this call.
    std::uint64_t run_until(SimTime t_end);

    SimTime now() const { return clock_; }

    // Conservation counters: scheduled == processed + cancelled + pending.
    std::uint64_t scheduled_count() const { return scheduled_; }
    std::uint64_t processed_count() const { return processed_; }
    std::uint64_t cancelled_count() const { return cancelled_; }
    std::uint64_t pending_count() const { return handlers_.size(); }

  private:
    struct Entry {
        SimTime fire_at;
        std::uint64_t sequence;
        EventId id;
        bool operator>(const Entry& o) const {
            if (fire_at != o.fire_at) return fire_at > o.fire_at;
            return sequence > o.sequence;
        }
    };

    SimTime clock_ = 0;
    std::uint64_t next_sequence_ = 0;
    EventId next_id_ = 1;
    std::uint64_t scheduled_ = 0;
    std::uint64_t processed_ = 0;
    std::uint64_t cancelled_ = 0;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue_;
    std::unordered_map<EventId, Handler> handlers_;
};

}  // namespace hybond
