// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "manetsim/simulation.hpp"
#include "support.hpp"

using namespace manetsim;
using test::kLambda;

namespace {

ScenarioConfig small_config(std::uint64_t seed, std::uint32_t nodes, ProtocolMode mode) {
    ScenarioConfig cfg;
    cfg.node_count = nodes;
    cfg.sim_time_s = 60.0;
    cfg.master_seed = seed;
    cfg.mode = mode;
    cfg.mobility.terrain_width_m = 300.0;
    cfg.mobility.terrain_height_m = 300.0;
    cfg.mobility.max_speed_mps = 20.0;
    cfg.radio.per_hop_latency_s = kLambda;
    cfg.n_sources = 2;
    return cfg;
}

} // namespace

TEST_CASE("small random networks keep the core invariants across 100 seeds") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        CAPTURE(seed);
        RandomStream shape(seed, "shape");
        const auto nodes = static_cast<std::uint32_t>(shape.uniform_int(3, 8));
        const ProtocolMode mode = seed % 3 == 0   ? ProtocolMode::Aodv
                                  : seed % 3 == 1 ? ProtocolMode::AodvAttacked
                                                  : ProtocolMode::Dpraodv;
        const ScenarioConfig cfg = small_config(seed, nodes, mode);

        test::RecordingTrace trace;
        Simulation sim(cfg, &trace);
        sim.run();

        // A discovery is processed at most once per node.
        std::set<std::tuple<NodeId, NodeId, std::uint32_t>> floods;
        std::size_t dedupe_violations = 0;
        for (const auto& [node, rreq] : trace.rreqs) {
            if (!floods.insert({node, rreq.origin, rreq.broadcast_id}).second) {
                ++dedupe_violations;
            }
        }
        CHECK(dedupe_violations == 0);

        // Route replacements advance strictly in (seq, -hops).
        std::map<std::pair<NodeId, NodeId>, std::pair<SeqNo, std::uint32_t>> last;
        std::size_t staleness_violations = 0;
        for (const auto& u : trace.route_updates) {
            const auto key = std::make_pair(u.node, u.dest);
            auto it = last.find(key);
            if (it != last.end()) {
                const auto [seq, hops] = it->second;
                if (!(u.seq > seq || (u.seq == seq && u.hops < hops))) {
                    ++staleness_violations;
                }
            }
            last[key] = {u.seq, u.hops};
        }
        CHECK(staleness_violations == 0);

        CHECK(sim.metrics().delivered() <= sim.metrics().sent());

        // Delivery can never beat the accumulated hop latency.
        std::size_t delay_violations = 0;
        for (const auto& d : trace.deliveries) {
            if (d.delay_s < double(d.packet.hops_so_far) * kLambda - 1e-9) {
                ++delay_violations;
            }
            if (d.packet.hops_so_far == 0) ++delay_violations; // src != dst always
        }
        CHECK(delay_violations == 0);

        // Nobody leaves the terrain.
        std::size_t escapes = 0;
        for (NodeId n = 0; n < cfg.node_count; ++n) {
            for (double t = 0.0; t <= cfg.sim_time_s; t += 6.0) {
                const Position p = sim.mobility().position_at(n, t);
                if (p.x < 0.0 || p.x > cfg.mobility.terrain_width_m || p.y < 0.0 ||
                    p.y > cfg.mobility.terrain_height_m) {
                    ++escapes;
                }
            }
        }
        CHECK(escapes == 0);
    }
}

TEST_CASE("one seed drives an identical world under every protocol mode") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CAPTURE(seed);
        Simulation plain(small_config(seed, 8, ProtocolMode::Aodv));
        Simulation attacked(small_config(seed, 8, ProtocolMode::AodvAttacked));
        Simulation guarded(small_config(seed, 8, ProtocolMode::Dpraodv));
        plain.run();
        attacked.run();
        guarded.run();

        CHECK(plain.trajectory_digest() == attacked.trajectory_digest());
        CHECK(plain.trajectory_digest() == guarded.trajectory_digest());

        // The traffic schedule is protocol-independent too.
        CHECK(plain.metrics().sent() == attacked.metrics().sent());
        CHECK(plain.metrics().sent() == guarded.metrics().sent());
        REQUIRE(plain.flows().size() == guarded.flows().size());
        for (std::size_t i = 0; i < plain.flows().size(); ++i) {
            CHECK(plain.flows()[i].src == guarded.flows()[i].src);
            CHECK(plain.flows()[i].dst == guarded.flows()[i].dst);
            CHECK(plain.flows()[i].start == guarded.flows()[i].start);
        }
    }
}

TEST_CASE("repeating a run reproduces it event for event") {
    for (std::uint64_t seed : {1ull, 42ull, 99ull}) {
        CAPTURE(seed);
        const ScenarioConfig cfg = small_config(seed, 7, ProtocolMode::Dpraodv);

        test::RecordingTrace t1;
        Simulation s1(cfg, &t1);
        s1.run();
        test::RecordingTrace t2;
        Simulation s2(cfg, &t2);
        s2.run();

        CHECK(s1.engine().dispatched_total() == s2.engine().dispatched_total());
        CHECK(s1.trajectory_digest() == s2.trajectory_digest());
        CHECK(s1.metrics().sent() == s2.metrics().sent());
        CHECK(s1.metrics().delivered() == s2.metrics().delivered());
        CHECK(s1.metrics().control_tx() == s2.metrics().control_tx());
        CHECK(s1.metrics().data_tx() == s2.metrics().data_tx());
        CHECK(s1.metrics().alarm_tx() == s2.metrics().alarm_tx());
        CHECK(s1.metrics().delay_sum_s() == s2.metrics().delay_sum_s()); // bitwise
        CHECK(t1.deliveries.size() == t2.deliveries.size());
        CHECK(t1.drops.size() == t2.drops.size());
        CHECK(t1.route_updates.size() == t2.route_updates.size());
    }
}
