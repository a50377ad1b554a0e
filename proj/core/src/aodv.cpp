// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/aodv.hpp"

#include <algorithm>

namespace manetsim {

AodvAgent::AodvAgent(NodeId id, AodvParams params, DpraodvParams guard_params, NodeContext ctx,
                     std::size_t node_count)
    : id_(id), params_(params), ctx_(ctx), node_count_(node_count), guard_(guard_params) {}

void AodvAgent::handle_packet(const Packet& packet, NodeId from) {
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RreqPacket>) {
                handle_rreq(p, from);
            } else if constexpr (std::is_same_v<T, RrepPacket>) {
                handle_rrep(p, from);
            } else if constexpr (std::is_same_v<T, RerrPacket>) {
                handle_rerr(p, from);
            } else if constexpr (std::is_same_v<T, AlarmPacket>) {
                handle_alarm(p, from);
            } else {
                handle_data(p, from);
            }
        },
        packet);
}

bool AodvAgent::install_route(NodeId dest, NodeId next_hop, std::uint32_t hops, SeqNo seq,
                              SimTime expires_at) {
    if (!table_.update(dest, next_hop, hops, seq, expires_at)) {
        return false;
    }
    ctx_.trace.on_route_updated(id_, dest, seq, hops, next_hop);
    return true;
}

void AodvAgent::handle_rreq(const RreqPacket& rreq, NodeId from) {
    if (!rreq_seen_.insert({rreq.origin, rreq.broadcast_id}).second) {
        return; // already processed this discovery
    }
    ctx_.trace.on_rreq_processed(id_, rreq);
    guard_.note_observed_seq(rreq.destination, rreq.dest_seq_known);
    guard_.note_observed_seq(rreq.origin, rreq.origin_seq);
    if (rreq.origin == id_) {
        return;
    }

    install_route(rreq.origin, from, rreq.hop_count + 1, rreq.origin_seq, route_expiry());

    const SimTime now = ctx_.engine.now();
    if (rreq.destination == id_) {
        if (params_.conditional_seq_bump) {
            own_seq_ = std::max(own_seq_, rreq.dest_seq_known);
            if (own_seq_ == rreq.dest_seq_known) ++own_seq_;
        } else {
            own_seq_ = std::max(own_seq_, rreq.dest_seq_known) + 1;
        }
        RrepPacket rrep;
        rrep.destination = id_;
        rrep.dest_seq = own_seq_;
        rrep.origin = rreq.origin;
        rrep.hop_count = 0;
        rrep.lifetime_s = params_.route_lifetime_s;
        rrep.replier = id_;
        ctx_.trace.on_rrep_generated(id_, rrep);
        const RouteEntry* rev = table_.find_valid(rreq.origin, now);
        ctx_.radio.unicast(id_, rev ? rev->next_hop : from, rrep);
        return;
    }

    RouteEntry* cached = table_.find_valid(rreq.destination, now);
    if (cached != nullptr && cached->dest_seq > rreq.dest_seq_known) {
        // Fresher knowledge than the requester's: answer from the table.
        RrepPacket rrep;
        rrep.destination = rreq.destination;
        rrep.dest_seq = cached->dest_seq;
        rrep.origin = rreq.origin;
        rrep.hop_count = cached->hop_count;
        rrep.lifetime_s = cached->expires_at - now;
        rrep.replier = id_;
        ctx_.trace.on_rrep_generated(id_, rrep);
        const RouteEntry* rev = table_.find_valid(rreq.origin, now);
        const NodeId rev_hop = rev ? rev->next_hop : from;
        table_.add_precursor(rreq.destination, rev_hop);
        ctx_.radio.unicast(id_, rev_hop, rrep);
        return;
    }

    RreqPacket fwd = rreq;
    fwd.hop_count += 1;
    ctx_.radio.broadcast(id_, fwd);
}

void AodvAgent::handle_rrep(const RrepPacket& rrep, NodeId from) {
    const SimTime now = ctx_.engine.now();
    if (guard_.params().enabled) {
        double diff = 0.0;
        const auto verdict = guard_.check(rrep, table_.known_seq(rrep.destination), diff);
        if (verdict == DpraodvGuard::Verdict::IgnoreBlacklisted) {
            return;
        }
        ctx_.trace.on_rrep_checked(id_, rrep, diff, guard_.threshold(),
                                   verdict == DpraodvGuard::Verdict::Suspect);
        if (verdict == DpraodvGuard::Verdict::Suspect) {
            guard_.blacklist_add(rrep.replier);
            ctx_.trace.on_suspect_flagged(id_, rrep.replier);
            emit_alarm(rrep.replier);
            return; // no table update and no forwarding for a flagged reply
        }
        guard_.note_observed_seq(rrep.destination, rrep.dest_seq);
    }

    if (!install_route(rrep.destination, from, rrep.hop_count + 1, rrep.dest_seq,
                       now + rrep.lifetime_s)) {
        return; // inferior to what we already have
    }

    if (rrep.origin == id_) {
        flush_buffer(rrep.destination);
        return;
    }

    RouteEntry* rev = table_.find_valid(rrep.origin, now);
    if (rev == nullptr) {
        ++ctx_.runlog.missing_reverse_route;
        return;
    }
    table_.add_precursor(rrep.destination, rev->next_hop);
    table_.add_precursor(rrep.origin, from);
    table_.touch(rrep.origin, route_expiry());
    RrepPacket fwd = rrep;
    fwd.hop_count += 1;
    ctx_.radio.unicast(id_, rev->next_hop, fwd);
}

void AodvAgent::handle_rerr(const RerrPacket& rerr, NodeId from) {
    RerrPacket fwd;
    std::vector<NodeId> invalidated;
    for (const auto& [dest, seq] : rerr.unreachable) {
        RouteEntry* e = table_.find(dest);
        if (e == nullptr || !e->valid || e->next_hop != from) {
            continue;
        }
        e->valid = false;
        e->dest_seq = std::max(e->dest_seq, seq);
        invalidated.push_back(dest);
        if (!e->precursors.empty()) {
            fwd.unreachable.emplace_back(dest, e->dest_seq);
        }
    }
    if (!fwd.unreachable.empty()) {
        ctx_.radio.broadcast(id_, fwd);
    }
    rediscover_if_sourcing(invalidated);
}

void AodvAgent::handle_alarm(const AlarmPacket& alarm, NodeId from) {
    (void)from;
    if (!guard_.params().enabled) {
        return;
    }
    if (!guard_.alarm_is_new(alarm.originator, alarm.alarm_id)) {
        return;
    }
    guard_.blacklist_add(alarm.suspect);
    if (guard_.params().alarm_scope == AlarmScope::Flood) {
        ctx_.radio.broadcast(id_, alarm);
    }
}

void AodvAgent::emit_alarm(NodeId suspect) {
    AlarmPacket alarm;
    alarm.suspect = suspect;
    alarm.originator = id_;
    alarm.alarm_id = guard_.next_alarm_id();
    guard_.alarm_is_new(alarm.originator, alarm.alarm_id); // never re-process our own copy
    ctx_.trace.on_alarm_sent(id_, alarm);
    ctx_.radio.broadcast(id_, alarm);
}

void AodvAgent::originate_data(const DataPacket& pkt) {
    ctx_.metrics.count_sent(pkt.flow);
    if (pkt.dst == id_) {
        deliver(pkt);
        return;
    }
    forward_data(pkt, id_, true);
}

void AodvAgent::handle_data(DataPacket pkt, NodeId from) {
    if (pkt.dst == id_) {
        deliver(pkt);
        return;
    }
    forward_data(std::move(pkt), from, false);
}

void AodvAgent::deliver(const DataPacket& pkt) {
    const double delay = ctx_.engine.now() - pkt.sent_at;
    ctx_.metrics.count_delivered(pkt.flow, delay);
    ctx_.trace.on_data_delivered(id_, pkt, delay);
}

void AodvAgent::forward_data(DataPacket pkt, NodeId from, bool originated) {
    const SimTime now = ctx_.engine.now();
    if (pkt.hops_so_far > node_count_ * params_.hop_cap_factor) {
        ++ctx_.runlog.hop_cap_drops;
        ctx_.metrics.count_dropped();
        ctx_.trace.on_data_dropped(id_, pkt, "hop_cap");
        return;
    }

    RouteEntry* e = table_.find_valid(pkt.dst, now);
    if (e != nullptr) {
        if (!originated) {
            e->precursors.insert(from);
        }
        const NodeId next_hop = e->next_hop;
        pkt.hops_so_far += 1;
        table_.touch(pkt.dst, route_expiry());
        if (ctx_.radio.unicast(id_, next_hop, pkt)) {
            return;
        }
        ctx_.metrics.count_dropped();
        ctx_.trace.on_data_dropped(id_, pkt, "link_break");
        local_link_break(next_hop);
        return;
    }

    auto it = pending_.find(pkt.dst);
    if (it == pending_.end()) {
        begin_discovery(pkt.dst);
        it = pending_.find(pkt.dst);
    }
    PendingDiscovery& pd = it->second;
    if (pd.buffered.size() >= params_.buffer_cap) {
        ++ctx_.runlog.buffer_overflow_drops;
        ctx_.metrics.count_dropped();
        ctx_.trace.on_data_dropped(id_, pd.buffered.front(), "buffer_overflow");
        pd.buffered.pop_front();
    }
    pd.buffered.push_back(std::move(pkt));
}

void AodvAgent::begin_discovery(NodeId dest) {
    PendingDiscovery pd;
    pd.retries_left = params_.discovery_retries;
    pending_[dest] = std::move(pd);
    send_rreq(dest);
    arm_discovery_timer(dest);
}

void AodvAgent::send_rreq(NodeId dest) {
    ++own_seq_;
    ++broadcast_id_;
    RreqPacket rreq;
    rreq.origin = id_;
    rreq.origin_seq = own_seq_;
    rreq.broadcast_id = broadcast_id_;
    rreq.destination = dest;
    rreq.dest_seq_known = table_.known_seq(dest);
    rreq.hop_count = 0;
    rreq_seen_.insert({id_, broadcast_id_}); // ignore our own flood echoing back
    ctx_.radio.broadcast(id_, rreq);
}

void AodvAgent::arm_discovery_timer(NodeId dest) {
    auto it = pending_.find(dest);
    it->second.timer_tag = ++timer_tag_counter_;
    TimerEvent timer{TimerKind::DiscoveryTimeout, dest, it->second.timer_tag};
    ctx_.engine.schedule(ctx_.engine.now() + params_.discovery_timeout_s, id_, timer);
}

void AodvAgent::handle_timer(const TimerEvent& timer) {
    if (timer.kind == TimerKind::ThresholdSlot) {
        if (guard_.params().enabled) {
            if (guard_.on_slot_boundary()) {
                ctx_.trace.on_threshold_updated(id_, guard_.threshold());
            }
            TimerEvent next{TimerKind::ThresholdSlot, 0, 0};
            ctx_.engine.schedule(ctx_.engine.now() + guard_.params().slot_length_s, id_, next);
        }
        return;
    }

    auto it = pending_.find(timer.subject);
    if (it == pending_.end() || it->second.timer_tag != timer.tag) {
        return; // discovery already completed or re-armed
    }
    if (it->second.retries_left > 0) {
        it->second.retries_left -= 1;
        send_rreq(timer.subject);
        arm_discovery_timer(timer.subject);
        return;
    }
    ++ctx_.runlog.discovery_failures;
    for (const DataPacket& pkt : it->second.buffered) {
        ctx_.metrics.count_dropped();
        ctx_.trace.on_data_dropped(id_, pkt, "discovery_failed");
    }
    pending_.erase(it);
}

void AodvAgent::flush_buffer(NodeId dest) {
    auto it = pending_.find(dest);
    if (it == pending_.end()) {
        return;
    }
    std::deque<DataPacket> buffered = std::move(it->second.buffered);
    pending_.erase(it);
    for (DataPacket& pkt : buffered) {
        forward_data(std::move(pkt), id_, true);
    }
}

void AodvAgent::local_link_break(NodeId broken) {
    const std::vector<NodeId> affected = table_.invalidate_via(broken);
    RerrPacket rerr;
    for (NodeId dest : affected) {
        const RouteEntry* e = table_.find(dest);
        if (e != nullptr && !e->precursors.empty()) {
            rerr.unreachable.emplace_back(dest, e->dest_seq);
        }
    }
    if (!rerr.unreachable.empty()) {
        ctx_.radio.broadcast(id_, rerr);
    }
    rediscover_if_sourcing(affected);
}

void AodvAgent::rediscover_if_sourcing(const std::vector<NodeId>& dests) {
    const SimTime now = ctx_.engine.now();
    for (NodeId dest : dests) {
        if (has_active_flow_to(dest, now) && pending_.find(dest) == pending_.end()) {
            begin_discovery(dest);
        }
    }
}

bool AodvAgent::has_active_flow_to(NodeId dest, SimTime now) const {
    return std::any_of(source_flows_.begin(), source_flows_.end(), [&](const FlowWindow& f) {
        return f.dst == dest && now >= f.start && now < f.stop;
    });
}

} // namespace manetsim
