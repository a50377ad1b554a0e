// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_EVENT_HPP
#define MANETSIM_EVENT_HPP

#include <cstdint>
#include <variant>

#include "manetsim/packet.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

/// A packet arriving at `target`, handed over by neighbor `from`.
struct PacketDelivery {
    Packet packet;
    NodeId from = 0;
};

enum class TimerKind {
    DiscoveryTimeout, // per-destination RREQ wait expired at an AODV agent
    ThresholdSlot,    // DPRAODV time-slot boundary
};

struct TimerEvent {
    TimerKind kind = TimerKind::DiscoveryTimeout;
    NodeId subject = 0;     // e.g. the destination a discovery is waiting on
    std::uint64_t tag = 0;  // disambiguates stale timers across re-arms
};

/// Waypoint arrival for `target`; the mobility model picks the next leg.
struct MobilityUpdate {};

/// One CBR interval elapsed for `flow`; originate one data packet.
struct TrafficTick {
    FlowId flow = 0;
};

using EventPayload = std::variant<PacketDelivery, TimerEvent, MobilityUpdate, TrafficTick>;

struct Event {
    SimTime time = 0.0;
    std::uint64_t tie_seq = 0; // insertion counter; equal-time events dispatch FIFO
    NodeId target = 0;
    EventPayload payload;
};

const char* timer_kind_name(TimerKind kind);

} // namespace manetsim

#endif
