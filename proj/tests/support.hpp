// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_TESTS_SUPPORT_HPP
#define MANETSIM_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "manetsim/agent.hpp"
#include "manetsim/engine.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/scenario.hpp"
#include "manetsim/trace.hpp"

namespace manetsim::test {

// 2^-9 s per hop: k hops accumulate to exactly representable delays, so the
// hand-built scenarios below can assert delays with ==.
constexpr double kLambda = 0.001953125;

struct RouteUpdate {
    NodeId node = 0;
    NodeId dest = 0;
    SeqNo seq = 0;
    std::uint32_t hops = 0;
    NodeId next_hop = 0;
};

struct ReplyCheck {
    NodeId node = 0;
    RrepPacket rrep;
    double diff = 0.0;
    double threshold = 0.0;
    bool suspect = false;
};

struct Delivery {
    NodeId node = 0;
    DataPacket packet;
    double delay_s = 0.0;
};

struct Drop {
    NodeId node = 0;
    DataPacket packet;
    std::string reason;
};

class RecordingTrace : public TraceSink {
  public:
    std::vector<std::pair<NodeId, RreqPacket>> rreqs;
    std::vector<RouteUpdate> route_updates;
    std::vector<std::pair<NodeId, RrepPacket>> rreps;
    std::vector<ReplyCheck> checks;
    std::vector<std::pair<NodeId, NodeId>> suspects;
    std::vector<std::pair<NodeId, AlarmPacket>> alarms;
    std::vector<std::pair<NodeId, double>> thresholds;
    std::vector<Delivery> deliveries;
    std::vector<Drop> drops;

    void on_rreq_processed(NodeId node, const RreqPacket& rreq) override {
        rreqs.emplace_back(node, rreq);
    }
    void on_route_updated(NodeId node, NodeId dest, SeqNo seq, std::uint32_t hops,
                          NodeId next_hop) override {
        route_updates.push_back({node, dest, seq, hops, next_hop});
    }
    void on_rrep_generated(NodeId node, const RrepPacket& rrep) override {
        rreps.emplace_back(node, rrep);
    }
    void on_rrep_checked(NodeId node, const RrepPacket& rrep, double diff, double threshold,
                         bool suspect) override {
        checks.push_back({node, rrep, diff, threshold, suspect});
    }
    void on_suspect_flagged(NodeId node, NodeId suspect) override {
        suspects.emplace_back(node, suspect);
    }
    void on_alarm_sent(NodeId node, const AlarmPacket& alarm) override {
        alarms.emplace_back(node, alarm);
    }
    void on_threshold_updated(NodeId node, double threshold) override {
        thresholds.emplace_back(node, threshold);
    }
    void on_data_delivered(NodeId node, const DataPacket& packet, double delay_s) override {
        deliveries.push_back({node, packet, delay_s});
    }
    void on_data_dropped(NodeId node, const DataPacket& packet,
                         std::string_view reason) override {
        drops.push_back({node, packet, std::string(reason)});
    }

    std::size_t drop_count(std::string_view reason) const {
        std::size_t n = 0;
        for (const Drop& d : drops) {
            if (d.reason == reason) ++n;
        }
        return n;
    }
};

inline MobilityParams static_terrain(double width = 800.0, double height = 800.0) {
    MobilityParams mp;
    mp.terrain_width_m = width;
    mp.terrain_height_m = height;
    mp.max_speed_mps = 0.0;
    return mp;
}

inline ScenarioConfig static_config(std::vector<Position> positions) {
    ScenarioConfig cfg;
    cfg.node_count = static_cast<std::uint32_t>(positions.size());
    cfg.sim_time_s = 30.0;
    cfg.mobility = static_terrain();
    cfg.radio.per_hop_latency_s = kLambda;
    cfg.malicious_nodes.clear();
    cfg.pinned_positions = std::move(positions);
    return cfg;
}

inline CbrFlow make_flow(NodeId src, NodeId dst, SimTime start, SimTime stop,
                         double interval = 0.25) {
    CbrFlow f;
    f.src = src;
    f.dst = dst;
    f.start = start;
    f.stop = stop;
    f.interval_s = interval;
    return f;
}

// Standalone node environment for driving a single agent by hand.
struct AgentHarness {
    RandomStream stream{1, "mobility"};
    RandomWaypointModel model;
    Engine engine;
    Metrics metrics;
    RunLog runlog;
    RecordingTrace trace;
    Radio radio;

    explicit AgentHarness(const std::vector<Position>& positions)
        : model(static_terrain(), positions.size(), stream),
          radio(RadioParams{250.0, kLambda}, engine, model, metrics) {
        model.set_positions(positions);
        model.start();
    }

    NodeContext ctx() { return NodeContext{engine, radio, metrics, runlog, trace}; }
};

} // namespace manetsim::test

#endif
