// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "manetsim/digest.hpp"
#include "manetsim/engine.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/rng.hpp"
#include "support.hpp"

using namespace manetsim;
using test::kLambda;

TEST_CASE("random streams replay identically for the same seed and label") {
    RandomStream a(42, "mobility");
    RandomStream b(42, "mobility");
    for (int i = 0; i < 32; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("streams with different labels are independent") {
    RandomStream ref(9, "attacker");
    std::vector<std::uint64_t> expected;
    for (int i = 0; i < 16; ++i) expected.push_back(ref.next_u64());

    // Interleaving draws from another stream must not perturb this one.
    RandomStream mobility(9, "mobility");
    RandomStream attacker(9, "attacker");
    for (int i = 0; i < 16; ++i) {
        mobility.next_u64();
        mobility.next_u64();
        CHECK(attacker.next_u64() == expected[static_cast<std::size_t>(i)]);
    }

    RandomStream other_label(9, "traffic");
    bool all_same = true;
    RandomStream again(9, "attacker");
    for (int i = 0; i < 16; ++i) {
        all_same = all_same && (other_label.next_u64() == again.next_u64());
    }
    CHECK_FALSE(all_same);
}

TEST_CASE("uniform_int respects both bounds") {
    RandomStream s(7, "traffic");
    CHECK(s.uniform_int(7, 7) == 7);
    for (int i = 0; i < 10000; ++i) {
        const auto v = s.uniform_int(15, 200);
        CHECK(v >= 15);
        CHECK(v <= 200);
    }
    CHECK_THROWS_AS(s.uniform_int(5, 4), std::logic_error);
}

TEST_CASE("uniform_int over [15,200] has the uniform mean") {
    RandomStream s(1, "attacker");
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        sum += static_cast<double>(s.uniform_int(15, 200));
    }
    const double mean = sum / n;
    CHECK(std::abs(mean - 107.5) <= 1.0);
}

TEST_CASE("uniform_real stays inside the half-open interval") {
    RandomStream s(3, "jitter");
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double v = s.uniform_real(1.0, 5.0);
        CHECK(v >= 1.0);
        CHECK(v < 5.0);
        sum += v;
    }
    CHECK(std::abs(sum / n - 3.0) < 0.02);
}

TEST_CASE("fnv1a64 matches the published reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    CHECK(to_hex(0xcbf29ce484222325ull) == "cbf29ce484222325");
    CHECK(to_hex(0x1ull) == "0000000000000001");
}

TEST_CASE("digest of a double uses its exact bit pattern") {
    Fnv1a64 a;
    a.add_double(0.0);
    Fnv1a64 b;
    b.add_double(-0.0);
    CHECK(a.value() != b.value()); // 0.0 and -0.0 differ bitwise

    Fnv1a64 c;
    c.add_double(1.5);
    Fnv1a64 d;
    d.add_double(1.5);
    CHECK(c.value() == d.value());
}

TEST_CASE("engine dispatches by time, then by insertion order") {
    Engine engine;
    std::vector<int> order;
    engine.set_handler([&](const Event& ev) { order.push_back(static_cast<int>(ev.target)); });

    engine.schedule(1.0, 0, MobilityUpdate{});
    engine.schedule(0.5, 1, MobilityUpdate{});
    engine.schedule(2.0, 2, MobilityUpdate{}); // same time, inserted first
    engine.schedule(2.0, 3, MobilityUpdate{}); // same time, inserted second
    engine.run_until(10.0);

    CHECK(order == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("engine refuses to schedule into the past") {
    Engine engine;
    engine.set_handler([](const Event&) {});
    engine.schedule(5.0, 0, MobilityUpdate{});
    engine.run_until(10.0);
    CHECK(engine.now() == 5.0);
    CHECK_THROWS_AS(engine.schedule(4.0, 0, MobilityUpdate{}), std::logic_error);
}

TEST_CASE("run_until dispatches exactly the events at or before the horizon") {
    Engine engine;
    engine.set_handler([](const Event&) {});
    CHECK(engine.run_until(10.0) == 0);

    engine.schedule(1.0, 0, MobilityUpdate{});
    engine.schedule(2.0, 0, MobilityUpdate{});
    engine.schedule(3.0, 0, MobilityUpdate{});
    CHECK(engine.run_until(2.0) == 2);
    CHECK(engine.now() == 2.0);
    CHECK(engine.pending() == 1);

    CHECK(engine.run_until(10.0) == 1);
    CHECK(engine.now() == 3.0); // queue drained: clock rests on the last event
    CHECK(engine.dispatched_total() == 3);
}

TEST_CASE("scripted legs move linearly and clamp at the target") {
    RandomStream s(1, "mobility");
    RandomWaypointModel model(test::static_terrain(), 2, s);
    model.set_positions({{0, 0}, {500, 500}});
    model.script_leg(0, {100, 0}, 10.0, 0.0);
    model.start();

    CHECK(model.position_at(0, 5.0).x == doctest::Approx(50.0));
    CHECK(model.position_at(0, 5.0).y == 0.0);
    CHECK(model.position_at(0, 10.0).x == 100.0); // arrival is exact
    CHECK(model.position_at(0, 25.0).x == 100.0); // and sticky
    CHECK(model.position_at(1, 25.0).x == 500.0); // unscripted static node
}

TEST_CASE("waypoint arrivals pause, then draw a fresh leg") {
    MobilityParams mp;
    mp.terrain_width_m = 400.0;
    mp.terrain_height_m = 400.0;
    mp.pause_time_s = 2.0;
    mp.min_speed_mps = 1.0;
    mp.max_speed_mps = 20.0;
    RandomStream s(11, "mobility");
    RandomWaypointModel model(mp, 3, s);

    auto arrivals = model.start();
    REQUIRE(arrivals.size() == 3);
    for (const auto& [node, arrive] : arrivals) {
        const auto& legs = model.legs(node);
        REQUIRE(legs.size() == 1);
        CHECK(legs.back().arrive == arrive);

        const Position at_arrival = model.position_at(node, arrive);
        const Position during_pause = model.position_at(node, arrive + 1.0);
        CHECK(at_arrival.x == legs.back().to.x);
        CHECK(during_pause.x == at_arrival.x); // paused nodes hold still
        CHECK(during_pause.y == at_arrival.y);

        const auto next = model.advance(node, arrive);
        REQUIRE(next.has_value());
        const auto& leg = model.legs(node).back();
        CHECK(leg.depart == arrive + mp.pause_time_s);
        CHECK(leg.speed > mp.min_speed_mps);
        CHECK(leg.speed <= mp.max_speed_mps);
        CHECK(*next == leg.arrive);
    }
}

TEST_CASE("positions never leave the terrain") {
    MobilityParams mp;
    mp.terrain_width_m = 300.0;
    mp.terrain_height_m = 200.0;
    mp.pause_time_s = 0.5;
    mp.max_speed_mps = 30.0;
    RandomStream s(5, "mobility");
    RandomWaypointModel model(mp, 4, s);

    // Drive the waypoint process the way a run would.
    std::vector<std::pair<NodeId, SimTime>> due = model.start();
    while (!due.empty()) {
        auto [node, when] = due.back();
        due.pop_back();
        if (when > 120.0) continue;
        if (auto next = model.advance(node, when)) {
            due.emplace_back(node, *next);
        }
    }

    for (NodeId n = 0; n < 4; ++n) {
        for (double t = 0.0; t <= 120.0; t += 0.5) {
            const Position p = model.position_at(n, t);
            CHECK(p.x >= 0.0);
            CHECK(p.x <= mp.terrain_width_m);
            CHECK(p.y >= 0.0);
            CHECK(p.y <= mp.terrain_height_m);
        }
    }
}

TEST_CASE("initial placement is uniform over the rectangle") {
    RandomStream s(2, "mobility");
    CHECK(RandomWaypointModel::init_positions(0, 800, 800, s).empty());

    auto one = RandomWaypointModel::init_positions(1, 800, 800, s);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x >= 0.0);
    CHECK(one[0].x <= 800.0);

    auto many = RandomWaypointModel::init_positions(10000, 800, 800, s);
    double mean_x = 0.0;
    for (const Position& p : many) mean_x += p.x;
    mean_x /= static_cast<double>(many.size());
    CHECK(std::abs(mean_x - 400.0) <= 10.0);
}

TEST_CASE("trajectories are a pure function of the seed") {
    MobilityParams mp;
    mp.max_speed_mps = 25.0;
    auto digest_for = [&](std::uint64_t seed) {
        RandomStream s(seed, "mobility");
        RandomWaypointModel model(mp, 5, s);
        auto due = model.start();
        while (!due.empty()) {
            auto [node, when] = due.back();
            due.pop_back();
            if (when > 200.0) continue;
            if (auto next = model.advance(node, when)) due.emplace_back(node, *next);
        }
        return model.trajectory_digest(200.0);
    };
    CHECK(digest_for(13) == digest_for(13));
    CHECK(digest_for(13) != digest_for(14));
}

TEST_CASE("the connectivity disk includes its boundary") {
    test::AgentHarness h({{0, 0}, {250, 0}, {250.0001, 200}});
    CHECK(h.radio.in_range(0, 1, 0.0));
    CHECK_FALSE(h.radio.in_range(0, 2, 0.0));
    CHECK(h.radio.neighbors(0, 0.0) == std::vector<NodeId>{1});
    CHECK(h.radio.neighbors(1, 0.0) == std::vector<NodeId>{0, 2}); // ascending ids
}

TEST_CASE("broadcast is one transmission delivered to every current neighbor") {
    test::AgentHarness h({{0, 0}, {100, 0}, {200, 0}, {700, 700}});
    std::vector<std::pair<SimTime, NodeId>> received;
    h.engine.set_handler([&](const Event& ev) { received.emplace_back(ev.time, ev.target); });

    h.radio.broadcast(0, RreqPacket{});
    CHECK(h.metrics.control_tx() == 1);
    h.engine.run_until(1.0);

    REQUIRE(received.size() == 2); // nodes 1 and 2; node 3 is out of range
    CHECK(received[0] == std::pair<SimTime, NodeId>{kLambda, 1});
    CHECK(received[1] == std::pair<SimTime, NodeId>{kLambda, 2});
}

TEST_CASE("unicast out of range reports failure but still counts the attempt") {
    test::AgentHarness h({{0, 0}, {600, 0}});
    h.engine.set_handler([](const Event&) {});
    CHECK_FALSE(h.radio.unicast(0, 1, RreqPacket{}));
    CHECK(h.metrics.control_tx() == 1);
    CHECK(h.engine.pending() == 0);

    DataPacket data;
    CHECK_FALSE(h.radio.unicast(0, 1, data));
    CHECK(h.metrics.data_tx() == 1);
}

TEST_CASE("radio rejects non-positive parameters") {
    Engine engine;
    Metrics metrics;
    RandomStream s(1, "mobility");
    RandomWaypointModel model(test::static_terrain(), 2, s);
    CHECK_THROWS_AS(Radio(RadioParams{0.0, 0.002}, engine, model, metrics),
                    std::invalid_argument);
    CHECK_THROWS_AS(Radio(RadioParams{250.0, 0.0}, engine, model, metrics),
                    std::invalid_argument);
}
