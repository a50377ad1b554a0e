// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace manetsim {

const char* timer_kind_name(TimerKind kind) {
    switch (kind) {
    case TimerKind::DiscoveryTimeout: return "discovery-timeout";
    case TimerKind::ThresholdSlot: return "threshold-slot";
    }
    return "?";
}

void Engine::schedule(SimTime time, NodeId target, EventPayload payload) {
    if (time < clock_) {
        throw std::logic_error("Engine::schedule: past event at t=" + std::to_string(time) +
                               " while clock is " + std::to_string(clock_));
    }
    heap_.push_back(Event{time, next_tie_seq_++, target, std::move(payload)});
    std::push_heap(heap_.begin(), heap_.end(), Later{});
}

std::size_t Engine::run_until(SimTime t_end) {
    std::size_t dispatched = 0;
    while (!heap_.empty() && heap_.front().time <= t_end) {
        std::pop_heap(heap_.begin(), heap_.end(), Later{});
        Event ev = std::move(heap_.back());
        heap_.pop_back();
        clock_ = ev.time;
        ++dispatched;
        ++dispatched_total_;
        handler_(ev);
    }
    if (!heap_.empty()) {
        clock_ = t_end;
    }
    return dispatched;
}

} // namespace manetsim
