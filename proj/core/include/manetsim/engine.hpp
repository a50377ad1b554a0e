// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_ENGINE_HPP
#define MANETSIM_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "manetsim/event.hpp"

namespace manetsim {

// Deterministic discrete-event core: a global clock plus an event heap
// ordered by (time, tie_seq). Equal-time events dispatch in insertion order,
// so two runs over the same inputs replay the exact same sequence.
//
// One engine drives one single-threaded simulation run; independent runs may
// execute in parallel with no shared state.
class Engine {
public:
    using Handler = std::function<void(const Event&)>;

    void set_handler(Handler handler) { handler_ = std::move(handler); }

    SimTime now() const { return clock_; }

    /// Enqueue an event. Scheduling into the past is a programming error and
    /// aborts the run with a diagnostic.
    void schedule(SimTime time, NodeId target, EventPayload payload);

    /// Dispatch every event with time <= t_end in (time, tie_seq) order.
    /// Returns the number of events dispatched by this call. Afterwards the
    /// clock is t_end if events remain queued beyond the horizon, otherwise
    /// the time of the last dispatched event.
    std::size_t run_until(SimTime t_end);

    std::size_t pending() const { return heap_.size(); }
    std::uint64_t dispatched_total() const { return dispatched_total_; }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.tie_seq > b.tie_seq;
        }
    };

    std::vector<Event> heap_; // min-heap via std::*_heap with Later
    Handler handler_;
    SimTime clock_ = 0.0;
    std::uint64_t next_tie_seq_ = 0;
    std::uint64_t dispatched_total_ = 0;
};

} // namespace manetsim

#endif
