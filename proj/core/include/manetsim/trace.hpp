// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_TRACE_HPP
#define MANETSIM_TRACE_HPP

#include <string_view>

#include "manetsim/packet.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

// Observation hooks for tests and diagnostics. Every callback defaults to a
// no-op; agents invoke them at the named protocol moments. A sink must not
// mutate simulation state.
class TraceSink {
  public:
    virtual ~TraceSink() = default;

    // Called once per route request a node actually processes; duplicates
    // suppressed by the (origin, broadcast_id) cache never reach this.
    virtual void on_rreq_processed(NodeId /*node*/, const RreqPacket& /*rreq*/) {}

    // Called on every accepted routing-table update.
    virtual void on_route_updated(NodeId /*node*/, NodeId /*dest*/, SeqNo /*seq*/,
                                  std::uint32_t /*hops*/, NodeId /*next_hop*/) {}

    // Called by the node that produces a route reply (destination or
    // intermediate with a fresh-enough route, or an attacker).
    virtual void on_rrep_generated(NodeId /*node*/, const RrepPacket& /*rrep*/) {}

    // Reply inspection verdict: diff is the replied sequence number minus
    // the locally held one, threshold the value it was compared against.
    virtual void on_rrep_checked(NodeId /*node*/, const RrepPacket& /*rrep*/, double /*diff*/,
                                 double /*threshold*/, bool /*suspect*/) {}

    // Local detection only; blacklist additions via received alarms do not
    // fire this.
    virtual void on_suspect_flagged(NodeId /*node*/, NodeId /*suspect*/) {}

    virtual void on_alarm_sent(NodeId /*node*/, const AlarmPacket& /*alarm*/) {}

    // Fired at each slot boundary that had at least one accepted reply.
    virtual void on_threshold_updated(NodeId /*node*/, double /*threshold*/) {}

    virtual void on_data_delivered(NodeId /*node*/, const DataPacket& /*packet*/,
                                   double /*delay_s*/) {}

    virtual void on_data_dropped(NodeId /*node*/, const DataPacket& /*packet*/,
                                 std::string_view /*reason*/) {}
};

} // namespace manetsim

#endif
