// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "manetsim/digest.hpp"

namespace manetsim {

RandomWaypointModel::RandomWaypointModel(MobilityParams params, std::size_t node_count,
                                         RandomStream& stream)
    : params_(params), stream_(stream), legs_(node_count) {
    if (params_.terrain_width_m <= 0.0 || params_.terrain_height_m <= 0.0) {
        throw std::invalid_argument("RandomWaypointModel: terrain dimensions must be positive");
    }
    auto positions = init_positions(node_count, params_.terrain_width_m,
                                    params_.terrain_height_m, stream_);
    set_positions(positions);
}

std::vector<Position> RandomWaypointModel::init_positions(std::size_t node_count,
                                                          double terrain_width_m,
                                                          double terrain_height_m,
                                                          RandomStream& stream) {
    std::vector<Position> out;
    out.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        Position p;
        p.x = stream.uniform_real(0.0, terrain_width_m);
        p.y = stream.uniform_real(0.0, terrain_height_m);
        out.push_back(p);
    }
    return out;
}

void RandomWaypointModel::set_positions(const std::vector<Position>& positions) {
    if (positions.size() != legs_.size()) {
        throw std::invalid_argument("RandomWaypointModel::set_positions: size mismatch");
    }
    if (started_) {
        throw std::logic_error("RandomWaypointModel::set_positions: model already started");
    }
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        legs_[i].clear();
        // Degenerate resting leg; replaced by start() for mobile nodes.
        legs_[i].push_back(Leg{0.0, positions[i], positions[i], 0.0, 0.0});
    }
    started_ = false;
}

RandomWaypointModel::Leg RandomWaypointModel::draw_leg(Position from, SimTime depart) {
    Leg leg;
    leg.depart = depart;
    leg.from = from;
    leg.to.x = stream_.uniform_real(0.0, params_.terrain_width_m);
    leg.to.y = stream_.uniform_real(0.0, params_.terrain_height_m);
    // Per-leg speed uniform in (min_speed, max_speed].
    const double u = stream_.uniform_real(0.0, 1.0);
    leg.speed = params_.max_speed_mps - u * (params_.max_speed_mps - params_.min_speed_mps);
    const double dist = std::sqrt(distance_sq(leg.from, leg.to));
    leg.arrive = depart + dist / leg.speed;
    return leg;
}

std::vector<std::pair<NodeId, SimTime>> RandomWaypointModel::start() {
    started_ = true;
    std::vector<std::pair<NodeId, SimTime>> arrivals;
    if (is_static()) {
        return arrivals;
    }
    arrivals.reserve(legs_.size());
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        const Position origin = legs_[i].back().to;
        legs_[i].back() = draw_leg(origin, 0.0); // first leg starts moving at t=0
        arrivals.emplace_back(static_cast<NodeId>(i), legs_[i].back().arrive);
    }
    return arrivals;
}

void RandomWaypointModel::script_leg(NodeId node, Position to, double speed, SimTime depart) {
    auto& history = legs_.at(node);
    const Position from = history.back().to;
    const double dist = std::sqrt(distance_sq(from, to));
    history.push_back(Leg{depart, from, to, speed, depart + dist / speed});
}

std::optional<SimTime> RandomWaypointModel::advance(NodeId node, SimTime now) {
    if (is_static()) {
        return std::nullopt;
    }
    auto& history = legs_.at(node);
    Leg next = draw_leg(history.back().to, now + params_.pause_time_s);
    history.push_back(next);
    return next.arrive;
}

Position RandomWaypointModel::position_at(NodeId node, SimTime t) const {
    const auto& history = legs_.at(node);
    // Most queries are at the live edge of the run; check the latest leg
    // before falling back to binary search over the leg history.
    const Leg* leg = &history.back();
    if (t < leg->depart) {
        auto it = std::upper_bound(history.begin(), history.end(), t,
                                   [](SimTime v, const Leg& l) { return v < l.depart; });
        leg = &*std::prev(it); // first leg departs at 0, so prev() is valid
    }
    if (t <= leg->depart) {
        return leg->from;
    }
    if (t >= leg->arrive) {
        return leg->to; // at the waypoint (possibly pausing)
    }
    const double frac = leg->speed * (t - leg->depart) /
                        std::sqrt(distance_sq(leg->from, leg->to));
    Position p;
    p.x = leg->from.x + frac * (leg->to.x - leg->from.x);
    p.y = leg->from.y + frac * (leg->to.y - leg->from.y);
    return p;
}

std::uint64_t RandomWaypointModel::trajectory_digest(SimTime t_end, double step_s) const {
    Fnv1a64 digest;
    for (SimTime t = 0.0; t <= t_end; t += step_s) {
        for (std::size_t i = 0; i < legs_.size(); ++i) {
            const Position p = position_at(static_cast<NodeId>(i), t);
            digest.add_double(p.x);
            digest.add_double(p.y);
        }
    }
    return digest.value();
}

} // namespace manetsim
