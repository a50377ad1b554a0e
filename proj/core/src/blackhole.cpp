// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/blackhole.hpp"

namespace manetsim {

BlackholeAgent::BlackholeAgent(NodeId id, BlackholeParams params, NodeContext ctx,
                               RandomStream& stream)
    : id_(id), params_(params), ctx_(ctx), stream_(stream) {}

void BlackholeAgent::handle_packet(const Packet& packet, NodeId from) {
    if (const auto* rreq = std::get_if<RreqPacket>(&packet)) {
        if (rreq->origin != id_ && rreq_seen_.insert({rreq->origin, rreq->broadcast_id}).second) {
            forge_reply(*rreq, from);
        }
        return;
    }
    if (const auto* data = std::get_if<DataPacket>(&packet)) {
        ++ctx_.runlog.blackhole_data_drops;
        ctx_.metrics.count_dropped();
        ctx_.trace.on_data_dropped(id_, *data, "blackhole");
        return;
    }
    // RREP, RERR and ALARM: neither forwarded nor acted upon.
}

void BlackholeAgent::forge_reply(const RreqPacket& rreq, NodeId from) {
    RrepPacket rrep;
    rrep.destination = rreq.destination;
    rrep.dest_seq = rreq.dest_seq_known +
                    static_cast<SeqNo>(stream_.uniform_int(params_.seq_offset_lo,
                                                           params_.seq_offset_hi));
    rrep.origin = rreq.origin;
    rrep.hop_count = params_.reply_hop_count;
    rrep.lifetime_s = params_.reply_lifetime_s;
    rrep.replier = id_;
    ctx_.trace.on_rrep_generated(id_, rrep);
    ctx_.radio.unicast(id_, from, rrep);
}

void BlackholeAgent::originate_data(const DataPacket& pkt) {
    // Never a configured source; any packet handed in is swallowed like the
    // rest, but it still counts as sent so the books stay consistent.
    ctx_.metrics.count_sent(pkt.flow);
    ++ctx_.runlog.blackhole_data_drops;
    ctx_.metrics.count_dropped();
    ctx_.trace.on_data_dropped(id_, pkt, "blackhole");
}

} // namespace manetsim
