#include "hybond/engine.hpp"

#include <utility>

namespace hybond {

EventId Simulator::schedule(SimTime fire_at, Handler handler) {
    if (fire_at < clock_) {
        throw SchedulingInPast("schedule at t=" + std::to_string(fire_at) +
                               "us but clock is " + std::to_string(clock_) + "us");
    }
    const EventId id = next_id_++;
    queue_.push(Entry{fire_at, next_sequence_++, id});
    handlers_.emplace(id, std::move(handler));
    ++scheduled_;
    return id;
}

bool Simulator::cancel(EventId id) {
    // Lazy deletion: the heap entry stays behind and is skipped at pop time.
    if (handlers_.erase(id) == 0) return false;
    ++cancelled_;
    return true;
}

std::uint64_t Simulator::run_until(SimTime t_end) {
    std::uint64_t processed_now = 0;
    while (!queue_.empty() && queue_.top().fire_at <= t_end) {
        const Entry entry = queue_.top();
        queue_.pop();
        auto it = handlers_.find(entry.id);
        if (it == handlers_.end()) continue;  // cancelled
        Handler handler = std::move(it->second);
        handlers_.erase(it);
        clock_ = entry.fire_at;
        ++processed_;
        ++processed_now;
        handler();
    }
    if (t_end > clock_) clock_ = t_end;
    return processed_now;
}

}  // namespace hybond
