// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/simulation.hpp"

namespace manetsim {

namespace {
TraceSink& null_trace() {
    static TraceSink sink;
    return sink;
}
} // namespace

Simulation::Simulation(const ScenarioConfig& config, TraceSink* trace)
    : config_(config),
      trace_(trace != nullptr ? trace : &null_trace()),
      mobility_stream_(config.master_seed, "mobility"),
      traffic_stream_(config.master_seed, "traffic"),
      attacker_stream_(config.master_seed, "attacker"),
      jitter_stream_(config.master_seed, "jitter"),
      mobility_(config.mobility, config.node_count, mobility_stream_),
      radio_(config.radio, engine_, mobility_, metrics_) {
    validate_scenario(config_);

    if (config_.pinned_positions) {
        mobility_.set_positions(*config_.pinned_positions);
    }
    for (const ScriptedLeg& leg : config_.scripted_legs) {
        mobility_.script_leg(leg.node, leg.to, leg.speed, leg.depart);
    }
    for (const auto& [node, arrive] : mobility_.start()) {
        engine_.schedule(arrive, node, MobilityUpdate{});
    }

    flows_ = resolve_flows(config_, traffic_stream_, jitter_stream_);

    NodeContext ctx{engine_, radio_, metrics_, runlog_, *trace_};
    BlackholeParams bh = config_.blackhole;
    bh.reply_lifetime_s = config_.aodv.route_lifetime_s;
    DpraodvParams guard = config_.dpraodv;
    guard.enabled = config_.detection_enabled();

    agents_.reserve(config_.node_count);
    for (NodeId n = 0; n < config_.node_count; ++n) {
        if (config_.attack_enabled() && config_.is_malicious(n)) {
            agents_.push_back(
                std::make_unique<BlackholeAgent>(n, bh, ctx, attacker_stream_));
        } else {
            agents_.push_back(std::make_unique<AodvAgent>(n, config_.aodv, guard, ctx,
                                                          config_.node_count));
        }
    }

    for (NodeId n = 0; n < config_.node_count; ++n) {
        auto* aodv = dynamic_cast<AodvAgent*>(agents_[n].get());
        if (aodv == nullptr) continue;
        std::vector<FlowWindow> sourced;
        for (const CbrFlow& f : flows_) {
            if (f.src == n) sourced.push_back({f.dst, f.start, f.stop});
        }
        aodv->set_source_flows(std::move(sourced));
        if (guard.enabled) {
            engine_.schedule(guard.slot_length_s, n,
                             TimerEvent{TimerKind::ThresholdSlot, 0, 0});
        }
    }

    for (const CbrFlow& f : flows_) {
        if (f.start < f.stop && f.start <= config_.sim_time_s) {
            engine_.schedule(f.start, f.src, TrafficTick{f.id});
        }
    }

    engine_.set_handler([this](const Event& ev) { dispatch(ev); });
}

const AodvAgent* Simulation::aodv_agent(NodeId node) const {
    return dynamic_cast<const AodvAgent*>(agents_.at(node).get());
}

void Simulation::dispatch(const Event& ev) {
    if (const auto* pd = std::get_if<PacketDelivery>(&ev.payload)) {
        agents_[ev.target]->handle_packet(pd->packet, pd->from);
        return;
    }
    if (const auto* timer = std::get_if<TimerEvent>(&ev.payload)) {
        agents_[ev.target]->handle_timer(*timer);
        return;
    }
    if (std::get_if<MobilityUpdate>(&ev.payload) != nullptr) {
        if (auto arrive = mobility_.advance(ev.target, engine_.now())) {
            engine_.schedule(*arrive, ev.target, MobilityUpdate{});
        }
        return;
    }
    const auto& tick = std::get<TrafficTick>(ev.payload);
    const CbrFlow& flow = flows_[tick.flow];
    const SimTime now = engine_.now();
    if (now >= flow.stop) {
        return;
    }
    DataPacket pkt;
    pkt.flow = flow.id;
    pkt.src = flow.src;
    pkt.dst = flow.dst;
    pkt.payload_bytes = flow.packet_bytes;
    pkt.sent_at = now;
    pkt.hops_so_far = 0;
    agents_[ev.target]->originate_data(pkt);
    const SimTime next = now + flow.interval_s;
    if (next < flow.stop) {
        engine_.schedule(next, flow.src, TrafficTick{flow.id});
    }
}

} // namespace manetsim
