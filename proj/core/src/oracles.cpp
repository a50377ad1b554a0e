// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/oracles.hpp"

namespace manetsim {

namespace {

// 2^-9 s: keeps every accumulated hop delay exactly representable.
constexpr double kDyadicHopLatency = 0.001953125;

ScenarioConfig static_base(std::uint32_t nodes, std::vector<Position> positions) {
    ScenarioConfig cfg;
    cfg.node_count = nodes;
    cfg.sim_time_s = 30.0;
    cfg.mobility.max_speed_mps = 0.0;
    cfg.radio.per_hop_latency_s = kDyadicHopLatency;
    cfg.malicious_nodes.clear();
    cfg.pinned_positions = std::move(positions);
    return cfg;
}

CbrFlow flow(NodeId src, NodeId dst, SimTime start, SimTime stop) {
    CbrFlow f;
    f.src = src;
    f.dst = dst;
    f.start = start;
    f.stop = stop;
    return f;
}

OracleScenario baseline_chain() {
    // 4-hop line, 200 m spacing. 40 packets; the first one waits out one
    // discovery round trip (8 hops), every packet then crosses 4 hops.
    ScenarioConfig cfg = static_base(
        5, {{0, 0}, {200, 0}, {400, 0}, {600, 0}, {800, 0}});
    cfg.explicit_flows = {flow(0, 4, 10.0, 20.0)};
    return {"baseline_chain",
            "static 5-node line, one flow end to end: PDR 1, exact hop delays",
            cfg};
}

ScenarioConfig attack_topology() {
    // 0 reaches both the blackhole (1) and the honest relay (2); 1 and 2 are
    // out of range of each other, 3 only hears 2. The forged reply beats the
    // genuine one home by two hops.
    ScenarioConfig cfg = static_base(4, {{0, 0}, {0, 200}, {200, 0}, {400, 0}});
    cfg.malicious_nodes = {1};
    cfg.blackhole.seq_offset_lo = 50;
    cfg.blackhole.seq_offset_hi = 50;
    cfg.explicit_flows = {flow(0, 3, 10.0, 20.0)};
    return cfg;
}

OracleScenario attack_race() {
    ScenarioConfig cfg = attack_topology();
    cfg.mode = ProtocolMode::AodvAttacked;
    return {"attack_race",
            "forged reply wins the race, every data packet is swallowed: PDR 0",
            cfg};
}

OracleScenario detection() {
    ScenarioConfig cfg = attack_topology();
    cfg.mode = ProtocolMode::Dpraodv;
    return {"detection",
            "same topology with the reply check on: blackhole isolated, PDR 1",
            cfg};
}

OracleScenario link_break_reroute() {
    // 1 carries the flow until it walks out of range: its forward of the
    // 6.75 tick fails one hop-latency later, and 0 loses the 7.0 tick before
    // its own rediscovery threads 0-4-5-2-3.
    ScenarioConfig cfg = static_base(
        6, {{0, 0}, {240, 0}, {480, 0}, {720, 0}, {120, 200}, {360, 200}});
    cfg.scripted_legs = {{1, {240, 400}, 40.0, 5.0}};
    cfg.explicit_flows = {flow(0, 3, 1.0, 25.0)};
    return {"link_break_reroute",
            "relay walks away mid-flow: two losses, reroute through the side path",
            cfg};
}

OracleScenario two_node_overhead() {
    // One RREQ + one RREP serve ten data packets: NRO exactly 0.2.
    ScenarioConfig cfg = static_base(2, {{0, 0}, {100, 0}});
    cfg.sim_time_s = 20.0;
    cfg.explicit_flows = {flow(0, 1, 10.0, 12.5)};
    return {"two_node_overhead",
            "adjacent pair, ten packets on one discovery: NRO 0.2 exactly",
            cfg};
}

OracleScenario disconnected_pair() {
    ScenarioConfig cfg = static_base(2, {{0, 0}, {600, 0}});
    cfg.sim_time_s = 20.0;
    cfg.explicit_flows = {flow(0, 1, 10.0, 12.5)};
    return {"disconnected_pair",
            "endpoints out of range: discovery retries then fails, PDR 0",
            cfg};
}

} // namespace

const std::vector<OracleScenario>& oracle_scenarios() {
    static const std::vector<OracleScenario> all = {
        baseline_chain(),   attack_race(),       detection(),
        link_break_reroute(), two_node_overhead(), disconnected_pair(),
    };
    return all;
}

const OracleScenario* find_oracle(std::string_view name) {
    for (const OracleScenario& o : oracle_scenarios()) {
        if (o.name == name) return &o;
    }
    return nullptr;
}

} // namespace manetsim
