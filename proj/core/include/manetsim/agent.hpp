// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_AGENT_HPP
#define MANETSIM_AGENT_HPP

#include "manetsim/engine.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/packet.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/trace.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

/// Shared run services handed to every node agent. All references outlive
/// the agents; everything is touched only from the single event loop.
struct NodeContext {
    Engine& engine;
    Radio& radio;
    Metrics& metrics;
    RunLog& runlog;
    TraceSink& trace;
};

// One per node. The event loop feeds an agent its packet deliveries, its
// timers, and the application packets it originates.
class Agent {
  public:
    virtual ~Agent() = default;
    virtual NodeId id() const = 0;
    virtual void handle_packet(const Packet& packet, NodeId from) = 0;
    virtual void handle_timer(const TimerEvent& timer) = 0;
    virtual void originate_data(const DataPacket& pkt) = 0;
};

} // namespace manetsim

#endif
