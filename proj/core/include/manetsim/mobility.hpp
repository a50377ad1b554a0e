// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_MOBILITY_HPP
#define MANETSIM_MOBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "manetsim/rng.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct MobilityParams {
    double terrain_width_m = 800.0;
    double terrain_height_m = 800.0;
    double pause_time_s = 2.0;
    double max_speed_mps = 60.0; // 0 disables movement entirely
    double min_speed_mps = 1.0;  // lower bound avoids the near-zero-speed decay pathology
};

// Random-waypoint mobility. Positions are evaluated lazily from per-node
// waypoint legs instead of periodic position-update events, so any past time
// in the run can be queried exactly. Each arrival appends the next leg
// (pause, then a fresh uniform target and per-leg uniform speed) and is the
// only moment the mobility stream is drawn from.
class RandomWaypointModel {
public:
    // One straight-line leg: depart `from` at `depart`, reach `to` at
    // `arrive`, then hold position until the next leg departs.
    struct Leg {
        SimTime depart = 0.0;
        Position from;
        Position to;
        double speed = 0.0;
        SimTime arrive = 0.0;
    };

    RandomWaypointModel(MobilityParams params, std::size_t node_count, RandomStream& stream);

    /// Uniform positions over the terrain rectangle; the stand-alone
    /// placement step, also usable without a model instance.
    static std::vector<Position> init_positions(std::size_t node_count,
                                                double terrain_width_m,
                                                double terrain_height_m,
                                                RandomStream& stream);

    /// Pin initial positions (oracle/test topologies) instead of drawing
    /// them. Must be called before first_arrival/advance.
    void set_positions(const std::vector<Position>& positions);

    /// Replace node's pending motion with one scripted leg departing at
    /// `depart` from its current position. Test and oracle hook.
    void script_leg(NodeId node, Position to, double speed, SimTime depart);

    /// Start the waypoint process: draws every node's first leg (no-op when
    /// max_speed is 0) and returns each mobile node's first arrival time.
    std::vector<std::pair<NodeId, SimTime>> start();

    /// Handle a waypoint arrival at `now`: pause, draw the next leg, and
    /// return its arrival time (nullopt for static nodes).
    std::optional<SimTime> advance(NodeId node, SimTime now);

    Position position_at(NodeId node, SimTime t) const;

    std::size_t node_count() const { return legs_.size(); }
    bool is_static() const { return params_.max_speed_mps <= 0.0; }
    const std::vector<Leg>& legs(NodeId node) const { return legs_[node]; }

    /// FNV-1a digest of all node positions sampled every `step_s` up to
    /// t_end. Two runs with identical mobility behavior digest identically.
    std::uint64_t trajectory_digest(SimTime t_end, double step_s = 1.0) const;

private:
    Leg draw_leg(Position from, SimTime depart);

    MobilityParams params_;
    RandomStream& stream_;
    std::vector<std::vector<Leg>> legs_; // per node, depart-ordered
    bool started_ = false;
};

} // namespace manetsim

#endif
